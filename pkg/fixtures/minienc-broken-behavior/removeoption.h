/* Compile-time switches for minienc's removable run-time options.
 *
 * Every directive defaults to 1, so a plain build keeps all options.
 * A specialized build overrides selected switches with -DNAME=0 on the
 * compiler command line, which strips the option's code regions.
 */
#ifndef MINIENC_REMOVEOPTION_H
#define MINIENC_REMOVEOPTION_H

#ifndef FAST_YES
#define FAST_YES 1
#endif
#ifndef FAST_NO
#define FAST_NO 1
#endif
#ifndef BLUR_YES
#define BLUR_YES 1
#endif
#ifndef SHARP_YES
#define SHARP_YES 1
#endif
#ifndef PSY_YES
#define PSY_YES 1
#endif
#ifndef PSY_NO
#define PSY_NO 1
#endif

#endif /* MINIENC_REMOVEOPTION_H */
