/* Byte-transform stages. All arithmetic is modular and input-driven, so
 * every stage is deterministic: no clocks, no randomness, no addresses. */

#include "stages.h"

#if FAST_YES
unsigned long stage_fast(unsigned char *buf, size_t len)
{
    size_t i;
    unsigned char carry = 0x1f;

    for (i = 0; i < len; i++) {
        unsigned char b = buf[i];
        b = (unsigned char)((b ^ 0xa5) + carry);
        b = (unsigned char)((b << 3) | (b >> 5));
        carry = (unsigned char)(b + 7);
        buf[i] = b;
    }
    return (unsigned long)len;
}
#endif

#if FAST_NO
unsigned long stage_thorough(unsigned char *buf, size_t len, int rounds)
{
    size_t i;
    int r;
    unsigned long units = 0;

    for (r = 0; r < rounds; r++) {
        unsigned char prev = (unsigned char)(0x3c + r);
        for (i = 0; i < len; i++) {
            unsigned char b = buf[i];
            b = (unsigned char)(b + prev * 31 + r);
            b = (unsigned char)(b ^ (b >> 4));
            prev = b;
            buf[i] = b;
        }
        units += (unsigned long)len;
    }
    return units;
}
#endif

#if BLUR_YES
#include "blur_table.h"

unsigned long stage_blur(unsigned char *buf, size_t len)
{
    size_t i;
    unsigned int acc = 0x9e37;

    for (i = 0; i < len; i++) {
        unsigned char next = (i + 1 < len) ? buf[i + 1] : 0x55;
        acc = (acc * 33 + buf[i] + next + (unsigned int)i) & 0xfff;
        buf[i] = (unsigned char)(buf[i] ^ blur_table[acc]);
    }
    return 2ul * (unsigned long)len;
}
#endif

#if SHARP_YES
unsigned long stage_sharp(unsigned char *buf, size_t len)
{
    size_t i;

    for (i = 0; i < len; i++) {
        unsigned char b = buf[i];
        b = (unsigned char)(b * 3 + (i & 0xff));
        b = (unsigned char)(b ^ (b << 2));
        buf[i] = b;
    }
    return (unsigned long)len;
}
#endif

#if PSY_YES
unsigned long stage_psy(unsigned char *buf, size_t len)
{
    size_t i;

    for (i = 0; i < len; i++) {
        unsigned int rot = (unsigned int)(i % 7u) + 1u;
        unsigned char b = buf[i];
        b = (unsigned char)((b << rot) | (b >> (8u - rot)));
        buf[i] = (unsigned char)(b + 13);
    }
    return (unsigned long)len;
}
#endif

#if PSY_NO
unsigned long stage_plain(unsigned char *buf, size_t len)
{
    size_t i;

    for (i = 0; i < len; i++)
        buf[i] = (unsigned char)(buf[i] + 1);
    return (unsigned long)len;
}
#endif
