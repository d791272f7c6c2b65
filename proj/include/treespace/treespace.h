/* treespace: exact combinatorial tree norms, Daugavet/delta-point
 * certification, convex decompositions, and geometry probes.
 *
 * C interface of the shared library. All functions return a status
 * code; results come back as opaque handles or malloc'd strings that
 * the caller releases with ts_string_free. Numeric values are exact
 * fractions rendered as "p/q".
 */
#ifndef TREESPACE_H
#define TREESPACE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ts_status {
  TS_OK = 0,
  TS_EPARSE = 2,    /* malformed input text or file */
  TS_ECAPACITY = 3, /* depth or support limits exceeded */
  TS_EVERIFY = 4,   /* certificate re-check failed */
  TS_EDOMAIN = 5,   /* precondition violated (norms, kinds, cones) */
  TS_EINTERNAL = 6
} ts_status;

/* Verdicts of ts_certify. */
#define TS_CERTIFIED 0
#define TS_REFUTED 10
#define TS_NOT_APPLICABLE 20

typedef struct ts_vector ts_vector;

/* Last error message of the calling thread, owned by the library. */
const char* ts_last_error(void);
void ts_string_free(char* s);

/* Vector files: header "kind=B|M depth=<d>", then "<node> <p/q>" lines
 * and optional "tail <node> <p/q>" lines; "ε" names the root. */
ts_status ts_vector_parse(const char* text, ts_vector** out);
ts_status ts_vector_read(const char* path, ts_vector** out);
ts_status ts_vector_format(const ts_vector* v, char** out_text);
void ts_vector_free(ts_vector* v);

/* Exact norm as "p/q". */
ts_status ts_vector_norm(const ts_vector* v, char** out_fraction);

/* Named constructions: "rooted-dyadic", "modified-dyadic",
 * "shifted-dyadic"; explicit coefficients to `depth`, geometric tails
 * attached unless with_tails is zero. */
ts_status ts_standard_vector(const char* name, unsigned depth, int with_tails,
                             ts_vector** out);

/* Daugavet certification on the modified tree (or refutation on the
 * rooted tree): verdict is TS_CERTIFIED, TS_REFUTED, or
 * TS_NOT_APPLICABLE; a certificate is emitted either way. */
ts_status ts_certify(const ts_vector* v, int* verdict, char** out_certificate);

/* Delta-point refutation on a classical backend ("l1", "c0",
 * "lorentz:w1,w2,..."); x_text holds "<index> <p/q>" lines. */
ts_status ts_delta_refute(const char* backend, const char* x_text, int* verdict,
                          char** out_certificate);

/* Convex decompositions of a finitely supported ball vector of the
 * modified tree; into_daugavet_terms selects the certified-point form. */
ts_status ts_decompose(const ts_vector* v, int into_daugavet_terms, char** out_certificate);

/* Moves y to a certified point inside the weak neighborhood cut out by
 * the functionals (text blocks: "functional kind=M", "coeff", "part",
 * "claim", "witness" lines) at width eps ("p/q"). */
ts_status ts_daugavetify(const ts_vector* y, const char* functionals_text, const char* eps,
                         unsigned depth_budget, char** out_vector, char** out_certificate);

/* Geometry probes: statement "lasq", "octahedral", or "weak-norm". */
ts_status ts_probe(const char* statement, long samples, unsigned depth,
                   unsigned long long seed, char** out_report);

/* Re-checks any certificate emitted by this library. On TS_EVERIFY the
 * first violated claim is returned in out_violation. */
ts_status ts_verify(const char* certificate_text, char** out_violation);

/* Reproduces the library's worked examples; TS_OK only if every line
 * checks out. */
ts_status ts_demo(char** out_report);

/* Graphviz rendering with norming sets highlighted. */
ts_status ts_export_dot(const ts_vector* v, int highlight_norming, char** out_dot);

#ifdef __cplusplus
}
#endif

#endif /* TREESPACE_H */
