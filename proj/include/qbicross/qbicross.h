#ifndef QBICROSS_QBICROSS_H
#define QBICROSS_QBICROSS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  define QBX_API __declspec(dllexport)
#else
#  define QBX_API __attribute__((visibility("default")))
#endif

typedef enum qbx_status {
  QBX_OK = 0,
  QBX_ERR_ARITHMETIC = 1,   /* zero denominator, division by zero */
  QBX_ERR_DOMAIN = 2,       /* argument outside the operation's domain */
  QBX_ERR_LOOKUP = 3,       /* unknown presentation or generator */
  QBX_ERR_STRUCTURE = 4,    /* malformed presentation or Hopf data */
  QBX_ERR_PARSE = 5,        /* expression or JSON syntax */
  QBX_ERR_INCOMPLETE = 6,   /* bounded search exhausted */
  QBX_ERR_INTERNAL = 7,     /* consistency assertion failed */
  QBX_ERR_ARGUMENT = 8      /* null pointer or bad enum value */
} qbx_status;

typedef enum qbx_format { QBX_TEXT = 0, QBX_JSON = 1 } qbx_format;

typedef enum qbx_rc_method { QBX_RC_DIRECT = 0, QBX_RC_CLOSED = 1 } qbx_rc_method;

/* An algebra with its rewrite system and, when the presentation carries one,
   its Hopf structure. */
typedef struct qbx_algebra qbx_algebra;

QBX_API const char* qbx_version(void);
QBX_API const char* qbx_status_name(qbx_status status);
/* Message of the last failed call on this thread; empty if none. */
QBX_API const char* qbx_last_error(void);
/* Strings returned through char** outputs are owned by the caller. */
QBX_API void qbx_string_free(char* s);

/* Builtin name (affine_new, affine_original, loop, cz) or path to a
   presentation JSON file. */
QBX_API qbx_status qbx_algebra_open(const char* name_or_path, qbx_algebra** out);
QBX_API void qbx_algebra_close(qbx_algebra* alg);
/* Presentation as JSON, with derived antipodes filled in when available. */
QBX_API qbx_status qbx_presentation_export(const qbx_algebra* alg, char** out);

QBX_API qbx_status qbx_normalize(const qbx_algebra* alg, const char* expr, qbx_format fmt, char** out);
QBX_API qbx_status qbx_multiply(const qbx_algebra* alg, const char* left, const char* right,
                                qbx_format fmt, char** out);
/* iterations = 1 gives the coproduct; n gives the (n+1)-fold tensor. */
QBX_API qbx_status qbx_coproduct(const qbx_algebra* alg, const char* expr, int iterations,
                                 qbx_format fmt, char** out);
QBX_API qbx_status qbx_counit(const qbx_algebra* alg, const char* expr, qbx_format fmt, char** out);
QBX_API qbx_status qbx_antipode(const qbx_algebra* alg, const char* expr, qbx_format fmt, char** out);
/* Membership in the ideal generated by the Serre relators, searched up to
   degree max_degree. */
QBX_API qbx_status qbx_serre_member(const qbx_algebra* alg, const char* expr, int max_degree, int* member);

/* Sweeps: "hopf" and "confluence" use alg; "cocycle", "ext" and "iso" use the
   builtin affine_new / loop / cz triple and accept any of those three as alg.
   passed is set to 1 when the report has no failures. */
QBX_API qbx_status qbx_verify(const qbx_algebra* alg, const char* check, int max_degree, uint64_t seed,
                              qbx_format fmt, char** out, int* passed);

/* Central extension maps. Loop expressions use e0, e1, f0, f1, k; extension
   elements are written as affine_new expressions, read through the
   identification c^m K^n ... <-> c^m (x) k^n ... */
QBX_API qbx_status qbx_jmap(const char* loop_expr, qbx_format fmt, char** out);
QBX_API qbx_status qbx_beta(const char* loop_expr, qbx_format fmt, char** out);
QBX_API qbx_status qbx_cocycle(const char* left, const char* right, int inverse, qbx_format fmt, char** out);
QBX_API qbx_status qbx_ext_multiply(const char* left, const char* right, qbx_format fmt, char** out);
QBX_API qbx_status qbx_ext_coproduct(const char* expr, qbx_format fmt, char** out);

/* chi(minus word (x) plus word), or chi(plus (x) minus) when plus_first is
   set. labels is a comma separated list for slots 1, 2, ... (NULL for z1,
   z2, ...). depth bounds the direct search. */
QBX_API qbx_status qbx_rcalc_cocycle(int minus, int plus, int plus_first, const char* labels,
                                     qbx_rc_method method, int depth, qbx_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif
