/* C interface to the poma library. All strings returned through char** are
   heap-allocated and must be released with poma_string_free. Reports are
   compact JSON. Functions return POMA_OK or an error code; the message for
   the last failure on the calling thread is available from poma_last_error. */
#ifndef POMA_POMA_H
#define POMA_POMA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define POMA_API __declspec(dllexport)
#else
#define POMA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum poma_status {
  POMA_OK = 0,
  POMA_ERR_ARGUMENT = 1,        /* null pointer, unknown name, bad option */
  POMA_ERR_PARSE = 2,           /* term / equation syntax */
  POMA_ERR_STRUCTURE = 3,       /* malformed JSON or tables */
  POMA_ERR_INVALID_ALGEBRA = 4, /* order is not a bounded distributive lattice */
  POMA_ERR_PRECONDITION = 5,
  POMA_ERR_BUDGET = 6,
  POMA_ERR_NOT_FOUND = 7,
  POMA_ERR_INTERNAL = 8
} poma_status;

typedef struct poma_algebra poma_algebra;
typedef struct poma_variety poma_variety;

POMA_API const char* poma_version(void);
POMA_API const char* poma_last_error(void);
POMA_API const char* poma_status_name(poma_status s);
POMA_API void poma_string_free(char* s);

/* ---- algebras */
POMA_API poma_status poma_algebra_corpus(const char* spec, poma_algebra** out);
POMA_API poma_status poma_algebra_from_json(const char* json, poma_algebra** out);
POMA_API poma_status poma_algebra_clone(const poma_algebra* a, poma_algebra** out);
POMA_API void poma_algebra_free(poma_algebra* a);
POMA_API size_t poma_algebra_size(const poma_algebra* a);
POMA_API poma_status poma_algebra_name(const poma_algebra* a, char** out);
POMA_API poma_status poma_algebra_to_json(const poma_algebra* a, char** out);
POMA_API poma_status poma_algebra_dot(const poma_algebra* a, int with_operators, char** out);
/* FNV-1a hash of the canonical form and the DOT node id derived from it. */
POMA_API poma_status poma_algebra_canonical_hash(const poma_algebra* a, uint64_t* out);
POMA_API poma_status poma_algebra_is_iso(const poma_algebra* a, const poma_algebra* b, int* out);
/* {"names": [...]} */
POMA_API poma_status poma_corpus_names(char** out);

/* Validation works on raw JSON so that invalid algebras can be reported. */
POMA_API poma_status poma_validate_json(const char* json, char** report);
/* name: "pma", "pk4", "ps4", "si", "fsi", "simple", "wc", "simple45", "cep", "trivial" */
POMA_API poma_status poma_predicate(const poma_algebra* a, const char* name, int* out);

/* ---- terms */
POMA_API poma_status poma_eval(const poma_algebra* a, const char* term, const char* assignment_json,
                               uint32_t* out);
/* Equation or quasi-equation; report {"holds": bool, "witness": {...}|null}. */
POMA_API poma_status poma_holds(const poma_algebra* a, const char* formula, char** report);
POMA_API poma_status poma_translate_tau(const char* sequent, char** equation);
/* {"first": "...", "second": "..."} */
POMA_API poma_status poma_translate_rho(const char* equation, char** report);

/* ---- congruences; pairs are flat (x0, y0, x1, y1, ...) */
POMA_API poma_status poma_cg(const poma_algebra* a, const uint32_t* pairs, size_t npairs, char** partition);
POMA_API poma_status poma_con_lattice(const poma_algebra* a, char** report);
POMA_API poma_status poma_monolith(const poma_algebra* a, char** partition);

/* ---- constructions */
POMA_API poma_status poma_hs_si(const poma_algebra* a, char** report);
POMA_API poma_status poma_si_quotients(const poma_algebra* a, char** report);
POMA_API poma_status poma_product(const poma_algebra* a, const poma_algebra* b, poma_algebra** out);
POMA_API poma_status poma_dual_space(const poma_algebra* a, char** report);
POMA_API poma_status poma_dual_space_dot(const poma_algebra* a, char** out);
/* {"algebra": {...}, "complement": [...], "kappa": [...], "fsi": bool, "simple": bool} */
POMA_API poma_status poma_envelope(const poma_algebra* a, char** report);
/* relation pairs are flat (x0, y0, ...) over worlds 0..worlds-1 */
POMA_API poma_status poma_complex_algebra(size_t worlds, const uint32_t* pairs, size_t npairs, poma_algebra** out);

/* ---- free algebras; generators_out receives `rank` element indices */
POMA_API poma_status poma_free_over(const poma_algebra* const* gens, size_t ngens, size_t rank,
                                    poma_algebra** out, uint32_t* generators_out);
POMA_API poma_status poma_free_zero(const poma_algebra* const* gens, size_t ngens, poma_algebra** out);
/* {"passed": bool, "bound": n, "stages": [{"stage", "passed", "detail"}]} */
POMA_API poma_status poma_figure1_verify(size_t bound, char** report);
/* {"worlds", "distinct", "exact_upto", "saturated_at"} */
POMA_API poma_status poma_growth(size_t worlds, char** report);

/* ---- enumeration; kind "PMA", "PK4" or "PS4"; cache_dir may be NULL.
   Report is a JSON array of algebras. */
POMA_API poma_status poma_enumerate(const char* kind, size_t min_size, size_t max_size, int si_only,
                                    int fsi_only, const char* cache_dir, int resume, char** report);

/* ---- varieties */
POMA_API poma_status poma_variety_new(const poma_algebra* const* gens, size_t ngens, poma_variety** out);
POMA_API void poma_variety_free(poma_variety* v);
/* {"label", "generators": [...], "si": [names], "hash"} */
POMA_API poma_status poma_variety_to_json(const poma_variety* v, char** out);
POMA_API poma_status poma_variety_includes(const poma_variety* v, const poma_variety* w, int* out);
POMA_API poma_status poma_variety_equals(const poma_variety* v, const poma_variety* w, int* out);
/* {"nodes": [labels], "edges": [[lower, upper], ...]} */
POMA_API poma_status poma_variety_covers(const poma_variety* const* vs, size_t n, char** report);
POMA_API poma_status poma_variety_covers_dot(const poma_variety* const* vs, size_t n, char** out);
/* {"nodes", "edges", "expected", "matches"} */
POMA_API poma_status poma_figure4(char** report);
POMA_API poma_status poma_figure4_dot(char** out);
/* which: "c3a", "c3b", "d3"; {"equation", "equation_holds", "excluded", "consistent"} */
POMA_API poma_status poma_splitting(const poma_algebra* a, const char* which, char** report);
/* name: thm610, lemma92, thm42, fact52, split, lemma83, lemma84, duality, cg_dl, cg_k4, tau_rho;
   {"name", "bound", "passed", "checked", "witnesses", "detail"} */
POMA_API poma_status poma_battery(const char* name, size_t bound, char** report);
/* Same, with enumerations read from / written to a JSON-lines cache directory. */
POMA_API poma_status poma_battery_cached(const char* name, size_t bound, const char* cache_dir, int resume,
                                         char** report);
/* box and dia as endomorphisms, their kernels and fixed points, on one algebra. */
POMA_API poma_status poma_endomorphism_report(const poma_algebra* a, char** report);
/* {"equation": "...", "terms", "truncated"} or {"equation": null, ...} */
POMA_API poma_status poma_separating_equation(const poma_algebra* a, const poma_algebra* b, unsigned depth,
                                              char** report);

/* ---- completeness; which: "sc", "hsc", "psc", "asc" -> {"status", "bound", "route", "witness"} */
POMA_API poma_status poma_complete(const poma_variety* v, const char* which, char** report);
/* {"b2_branch", "n", "m", "bound", "holds"} */
POMA_API poma_status poma_thm93(const poma_variety* v, size_t bound, char** report);
POMA_API poma_status poma_lemma22(const poma_variety* v, int* out);
/* {"status", "valid", "rank", "bound", "assignment", "substitution"} */
POMA_API poma_status poma_quasi_classify(const poma_variety* v, const char* quasi, size_t max_free_rank,
                                         char** report);
/* {"bound", "rows": [{"algebra", "status", "reason"}], "unknown"} */
POMA_API poma_status poma_asc_experiment(size_t bound, char** report);

#ifdef __cplusplus
}
#endif

#endif
