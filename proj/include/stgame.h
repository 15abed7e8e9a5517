/* stgame - equilibrium engine for games laid out in Minkowski spacetime.
 *
 * C interface. Games are opaque handles created from GameDocument text;
 * results come back as NUL-terminated strings owned by the library (release
 * with stg_string_free). Every fallible call returns a status code; on
 * failure stg_last_error() holds a human-readable message for the current
 * thread until the next failing call.
 */
#ifndef STGAME_H
#define STGAME_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct stg_game stg_game;

typedef enum stg_status {
  STG_OK = 0,
  STG_ERR_PARSE = 1,   /* malformed document text */
  STG_ERR_INVALID = 2, /* parsed but structurally invalid game */
  STG_ERR_DOMAIN = 3,  /* valid input, operation not applicable (non-generic, ...) */
  STG_ERR_USAGE = 4    /* bad arguments to the API call itself */
} stg_status;

const char* stg_version(void);

/* Message for the last failing call on this thread; never NULL. */
const char* stg_last_error(void);

void stg_string_free(char* s);
void stg_game_free(stg_game* g);

/* Parse GameDocument text into a validated game handle. */
stg_status stg_game_parse(const char* text, stg_game** out);

/* Validation report for possibly-invalid text. Succeeds whenever the text is
 * syntactically well formed; *error_count receives the number of Error-level
 * violations (0 = valid, warnings may still be present in the report). */
stg_status stg_game_validate_text(const char* text, char** report, int* error_count);

stg_status stg_game_serialize(const stg_game* g, char** text);

/* Outcome set in canonical order, one "key = payoffs" line per outcome. */
stg_status stg_game_outcomes(const stg_game* g, char** text);

/* target: "extensive" | "strategic" | "dot". */
stg_status stg_game_convert(const stg_game* g, const char* target, char** text);

/* method: "nash" | "spe" | "ppe" | "pte"; with_trace adds elimination rounds
 * for pte/ppe. Non-existence (empty Nash set, no surviving history) is a
 * successful result; NonGeneric and ImperfectInformation are STG_ERR_DOMAIN. */
stg_status stg_game_solve(const stg_game* g, const char* method, int with_trace,
                          char** text);

stg_status stg_game_contextuality(const stg_game* g, char** text);

/* semantics: "nash" (deviation from the first pure Nash profile) or
 * "transparent" (constrained re-solve). */
stg_status stg_game_free_choice(const stg_game* g, const char* point,
                                const char* semantics, char** text);

/* Canonical Bell laboratory document (default payoffs). */
stg_status stg_bell_game(char** text);

/* CHSH score and locality verdict for four correlation values. Each argument
 * accepts a rational ("1", "-3/4", "0.5") or the tokens "rt2/2" / "-rt2/2". */
stg_status stg_bell_chsh(const char* e11, const char* e12, const char* e21,
                         const char* e22, char** text);

/* Exhaustive scan of the 16 deterministic local models. */
stg_status stg_bell_scan(char** text);

/* Random generic game document. edge_density is a rational or decimal in [0,1]. */
stg_status stg_generate(unsigned nodes, unsigned max_actions, unsigned players,
                        const char* edge_density, uint64_t seed, char** text);

/* Equilibrium statistics CSV over `count` generated games. Byte-identical for
 * any worker count (>= 1). */
stg_status stg_stats(unsigned count, unsigned nodes, unsigned max_actions,
                     unsigned players, const char* edge_density, uint64_t seed,
                     unsigned workers, char** csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STGAME_H */
