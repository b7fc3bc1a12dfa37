#ifndef LIPSPACE_H
#define LIPSPACE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LIP_API __declspec(dllexport)
#else
#define LIP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lip_status {
    LIP_OK = 0,
    LIP_ERR_PARSE = 1,            /* malformed space string, input file or argument text */
    LIP_ERR_INVALID_SPACE = 2,    /* parsed, but fails validation; report in lip_last_error() */
    LIP_ERR_UNSUPPORTED = 3,      /* no route for this space / method / input */
    LIP_ERR_INVALID_ARGUMENT = 4,
    LIP_ERR_IO = 5,
    LIP_ERR_WITNESS_INTERVAL = 6, /* exponent or side parameters outside the witness interval */
    LIP_ERR_UNKNOWN_SUITE = 7,
    LIP_ERR_INTERNAL = 8
} lip_status;

typedef enum lip_verdict { LIP_EMBEDS = 0, LIP_DOES_NOT_EMBED = 1, LIP_OUTSIDE_THEORY = 2 } lip_verdict;

typedef enum lip_format { LIP_FORMAT_JSON = 0, LIP_FORMAT_CSV = 1 } lip_format;

typedef struct lip_space lip_space;
typedef struct lip_result lip_result;

LIP_API const char* lip_version(void);
LIP_API const char* lip_status_name(lip_status s);

/* Message for the last failing call on this thread; empty when none. */
LIP_API const char* lip_last_error(void);

/* n <= 0 restores the hardware default. */
LIP_API lip_status lip_set_threads(int n);
LIP_API int lip_threads(void);

/* Kind:key=val,... e.g. "Lip:alpha=1/2,p=2,q=2,b=1,d=1". Validation runs after parsing. */
LIP_API lip_status lip_space_parse(const char* text, lip_space** out);
LIP_API const char* lip_space_string(const lip_space* sp);
LIP_API void lip_space_free(lip_space* sp);

typedef struct lip_norm_options {
    const char* method;     /* auto, fourier, modulus, means, haar, closed, direct */
    const char* input_kind; /* signal, lacunary, gm */
    const char* partition;  /* sharp, bump */
    size_t N;               /* grid for coefficient inputs on sampled routes */
    int scales;             /* modulus scales, -1 for the default */
} lip_norm_options;

LIP_API void lip_norm_options_init(lip_norm_options* opt);

LIP_API lip_status lip_norm_file(const lip_space* sp, const char* path, const lip_norm_options* opt,
                                 lip_result** out);
/* im may be NULL for real samples. */
LIP_API lip_status lip_norm_samples(const lip_space* sp, const double* re, const double* im, size_t n,
                                    const lip_norm_options* opt, lip_result** out);

/* Result code is a lip_verdict. */
LIP_API lip_status lip_embed(const lip_space* src, const lip_space* dst, lip_result** out);

typedef struct lip_witness_spec {
    const char* kind; /* lacunary-besov-lip, lacunary-lip-besov, gm-lip-lz */
    double alpha;
    double beta;
    double b;
    double p;
    double q;
    double epsilon;
    double r;
    double xi;
    double scale;
    const size_t* truncations;
    size_t truncation_count;
} lip_witness_spec;

LIP_API void lip_witness_spec_init(lip_witness_spec* ws);

/* Result code is 1 when the divergence pattern held. */
LIP_API lip_status lip_witness(const lip_witness_spec* ws, lip_result** out);

LIP_API size_t lip_suite_count(void);
LIP_API const char* lip_suite_name(size_t i);

/* Result code is 1 when every check passed. empty_corpus != 0 runs on an empty corpus. */
LIP_API lip_status lip_verify(const char* suite, uint64_t seed, int empty_corpus, lip_result** out);
LIP_API uint64_t lip_default_seed(void);

/* Deterministic payload; NULL when the format is not available. */
LIP_API const char* lip_result_text(const lip_result* r, lip_format fmt);
/* Human-readable summary or one-line verdict. */
LIP_API const char* lip_result_summary(const lip_result* r);
/* JSON run metadata (timings, thread count); not part of the payload. */
LIP_API const char* lip_result_meta(const lip_result* r);
LIP_API double lip_result_value(const lip_result* r);
LIP_API int lip_result_code(const lip_result* r);
LIP_API void lip_result_free(lip_result* r);

#ifdef __cplusplus
}
#endif

#endif
