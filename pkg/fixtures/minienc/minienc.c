/* minienc - a miniature deterministic "encoder" with removable options.
 *
 * Usage: minienc [options] -o <output> <input>
 *
 * Run-time options (each removable at compile time, see removeoption.h):
 *   --fast / --no-fast   alternative transform modes
 *   --blur               table-driven mixing stage
 *   --sharp              contrast stage
 *   --psy / --no-psy     alternative finishing stages
 *   --preset=p1..p4      option bundles (see table below)
 *
 * Preset/option matrix (x = set by the preset):
 *              p1  p2  p3  p4
 *   --fast      .   .   .   .
 *   --no-fast   x   x   x   x
 *   --blur      .   x   x   x
 *   --sharp     .   .   x   x
 *   --psy       x   x   x   x
 *   --no-psy    .   .   .   .
 * p3 and p4 differ only in their internal round count.
 */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "removeoption.h"
#include "stages.h"

#define MAX_INPUT (1u << 20)

struct config {
    int fast;   /* 1 = fast transform, 0 = thorough transform */
    int blur;
    int sharp;
    int psy;    /* 1 = psy finishing, 0 = plain finishing */
    int rounds; /* thorough-transform rounds, set by presets */
};

static const struct config defaults = { 0, 0, 0, 1, 1 };

static int usage(const char *argv0)
{
    fprintf(stderr,
            "usage: %s [--preset=p1..p4] [--fast|--no-fast] [--blur] "
            "[--sharp] [--psy|--no-psy] -o <output> <input>\n",
            argv0);
    return 2;
}

static int unavailable(const char *flag)
{
    fprintf(stderr, "minienc: option '%s' is not available in this build\n",
            flag);
    return 3;
}

static int apply_preset(struct config *cfg, const char *name)
{
    if (strcmp(name, "p1") == 0) {
        cfg->fast = 0; cfg->blur = 0; cfg->sharp = 0; cfg->psy = 1;
        cfg->rounds = 1;
    } else if (strcmp(name, "p2") == 0) {
        cfg->fast = 0; cfg->blur = 1; cfg->sharp = 0; cfg->psy = 1;
        cfg->rounds = 2;
    } else if (strcmp(name, "p3") == 0) {
        cfg->fast = 0; cfg->blur = 1; cfg->sharp = 1; cfg->psy = 1;
        cfg->rounds = 3;
    } else if (strcmp(name, "p4") == 0) {
        cfg->fast = 0; cfg->blur = 1; cfg->sharp = 1; cfg->psy = 1;
        cfg->rounds = 4;
    } else {
        return -1;
    }
    return 0;
}

int main(int argc, char **argv)
{
    struct config cfg = defaults;
    const char *in_path = NULL;
    const char *out_path = NULL;
    unsigned char *buf;
    size_t len;
    unsigned long units = 0;
    unsigned long in_sum = 0, out_sum = 0;
    size_t i;
    FILE *fp;
    int argi;

    for (argi = 1; argi < argc; argi++) {
        const char *arg = argv[argi];

        if (strncmp(arg, "--preset=", 9) == 0) {
            if (apply_preset(&cfg, arg + 9) != 0) {
                fprintf(stderr, "minienc: unknown preset '%s'\n", arg + 9);
                return usage(argv[0]);
            }
        } else if (strcmp(arg, "--fast") == 0) {
            int available = 0;
#if FAST_YES /* option --fast */
            available = 1;
            cfg.fast = 1;
#endif
            if (!available)
                return unavailable(arg);
        } else if (strcmp(arg, "--no-fast") == 0) {
            int available = 0;
#if FAST_NO /* option --no-fast */
            available = 1;
            cfg.fast = 0;
#endif
            if (!available)
                return unavailable(arg);
        } else if (strcmp(arg, "--blur") == 0) {
            int available = 0;
#if BLUR_YES /* option --blur */
            available = 1;
            cfg.blur = 1;
#endif
            if (!available)
                return unavailable(arg);
        } else if (strcmp(arg, "--sharp") == 0) {
            int available = 0;
#if SHARP_YES /* option --sharp */
            available = 1;
            cfg.sharp = 1;
#endif
            if (!available)
                return unavailable(arg);
        } else if (strcmp(arg, "--psy") == 0) {
            int available = 0;
#if PSY_YES /* option --psy */
            available = 1;
            cfg.psy = 1;
#endif
            if (!available)
                return unavailable(arg);
        } else if (strcmp(arg, "--no-psy") == 0) {
            int available = 0;
#if PSY_NO /* option --no-psy */
            available = 1;
            cfg.psy = 0;
#endif
            if (!available)
                return unavailable(arg);
        } else if (strcmp(arg, "-o") == 0) {
            if (argi + 1 >= argc)
                return usage(argv[0]);
            out_path = argv[++argi];
        } else if (arg[0] == '-' && arg[1] != '\0') {
            fprintf(stderr, "minienc: unknown option '%s'\n", arg);
            return usage(argv[0]);
        } else {
            if (in_path != NULL)
                return usage(argv[0]);
            in_path = arg;
        }
    }
    if (in_path == NULL || out_path == NULL)
        return usage(argv[0]);

    fp = fopen(in_path, "rb");
    if (fp == NULL) {
        fprintf(stderr, "minienc: cannot open input '%s'\n", in_path);
        return 1;
    }
    buf = malloc(MAX_INPUT);
    if (buf == NULL) {
        fclose(fp);
        return 1;
    }
    len = fread(buf, 1, MAX_INPUT, fp);
    fclose(fp);
    if (len == 0) {
        fprintf(stderr, "minienc: empty or unreadable input '%s'\n", in_path);
        free(buf);
        return 1;
    }

    for (i = 0; i < len; i++)
        in_sum += buf[i];

    /* Transform pipeline. */
#if FAST_YES /* option --fast */
    if (cfg.fast)
        units += stage_fast(buf, len);
#endif
#if FAST_YES && FAST_NO
    else
#endif
#if FAST_NO /* option --no-fast */
        units += stage_thorough(buf, len, cfg.rounds);
#endif

#if BLUR_YES /* option --blur */
    if (cfg.blur)
        units += stage_blur(buf, len);
#endif

#if SHARP_YES /* option --sharp */
    if (cfg.sharp)
        units += stage_sharp(buf, len);
#endif

#if PSY_YES /* option --psy */
    if (cfg.psy)
        units += stage_psy(buf, len);
#endif
#if PSY_YES && PSY_NO
    else
#endif
#if PSY_NO /* option --no-psy */
        units += stage_plain(buf, len);
#endif

    /* Output whitening, applied in every configuration. */
    for (i = 0; i < len; i++)
        buf[i] = (unsigned char)(buf[i] ^ 0x5a);
    units += (unsigned long)len;

    for (i = 0; i < len; i++)
        out_sum += buf[i];

    fp = fopen(out_path, "wb");
    if (fp == NULL) {
        fprintf(stderr, "minienc: cannot open output '%s'\n", out_path);
        free(buf);
        return 1;
    }
    if (fwrite(buf, 1, len, fp) != len) {
        fclose(fp);
        free(buf);
        return 1;
    }
    fclose(fp);

    printf("time-units: %lu\n", units);
    printf("ratio: %.6f\n", in_sum ? (double)out_sum / (double)in_sum : 0.0);
    free(buf);
    return 0;
}
