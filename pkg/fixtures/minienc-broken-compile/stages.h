#ifndef MINIENC_STAGES_H
#define MINIENC_STAGES_H

#include <stddef.h>

#include "removeoption.h"

/* Each stage transforms buf in place and returns the work units spent. */

#if FAST_YES
unsigned long stage_fast(unsigned char *buf, size_t len);
#endif
#if FAST_NO
unsigned long stage_thorough(unsigned char *buf, size_t len, int rounds);
#endif
#if BLUR_YES
unsigned long stage_blur(unsigned char *buf, size_t len);
#endif
#if SHARP_YES
unsigned long stage_sharp(unsigned char *buf, size_t len);
#endif
#if PSY_YES
unsigned long stage_psy(unsigned char *buf, size_t len);
#endif
#if PSY_NO
unsigned long stage_plain(unsigned char *buf, size_t len);
#endif

#endif /* MINIENC_STAGES_H */
