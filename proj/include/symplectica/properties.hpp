#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "symplectica/majorization.hpp"
#include "symplectica/pinching.hpp"
#include "symplectica/symplectic.hpp"

#include <json.hpp>

namespace symplectica {

/// Outcome of one relation check. `details` carries residuals, margins and
/// ledgers; on failure it also embeds the input matrices so the single trial
/// can be replayed from the report alone.
struct CheckReport {
  std::string name;
  bool passed;
  nlohmann::ordered_json details;
  std::string inputs_digest;
  std::optional<std::uint64_t> seed;

  nlohmann::ordered_json to_json() const;
};

enum class EnsembleKind { GenericSpd, BlockedSpd, DiagonalBlocks };

const char* ensemble_kind_name(EnsembleKind kind);

struct EnsembleSpec {
  int n = 2;                    // block dimension; matrices are 2n x 2n
  int trials = 100;
  std::uint64_t seed = 0;
  double condition_cap = 1e4;
  EnsembleKind kind = EnsembleKind::BlockedSpd;
};

/// FNV-1a over the raw entry bytes; stable fingerprint for replay bookkeeping.
std::string digest(std::initializer_list<const SquareMatrix*> ms);

// --- seeded generators ---------------------------------------------------

/// Q diag(lambda) Q^T with Q from orthogonalized Gaussian draws and lambda
/// log-uniform in [1, condition_cap].
SpdMatrix gen_spd(int n, std::uint64_t seed, double condition_cap = 1e4);

/// Product of elementary symplectics: (O (+) O), diag(c) (+) diag(1/c), and
/// shears [[I, S], [0, I]] with S symmetric. Group membership by construction.
SymplecticMatrix gen_symplectic(int n, std::uint64_t seed);

/// SPD of dimension 2n read as blocks (joint positivity for free).
BlockedSpd gen_blocked_spd(int n, std::uint64_t seed, double condition_cap = 1e4);

struct DiagonalBlocks {
  std::vector<double> eta, gamma, beta;  // eta_j gamma_j - beta_j^2 > 0
  BlockedSpd assemble() const;
};

DiagonalBlocks gen_diagonal_blocks(int n, std::uint64_t seed, double condition_cap = 1e4);

// --- relation checks ------------------------------------------------------

/// d(E (+) G) = lambda((G^{1/2} E G^{1/2})^{1/2}) = sorted sqrt(sigma(EG)).
CheckReport check_lemma1(const SpdMatrix& e, const SpdMatrix& g);

/// d(E (+) G) prec^w d(A).
CheckReport check_main_theorem(const BlockedSpd& ab);

/// lambda((G^{1/2}EG^{1/2})^{1/2}) prec^w d(A), elementwise <= lambda((E+G)/2),
/// and lambda((E+G)/2) prec^w d(A).
CheckReport check_corollary_gavg(const BlockedSpd& ab);

/// lambda(E+G) = d((E (+) G) + (G (+) E)) and lambda(E+G) prec^w 2 d(E (+) G).
CheckReport check_hiroshima_instance(const SpdMatrix& e, const SpdMatrix& g);

/// sorted Delta_s(A) prec^w d(E (+) G) and prec^w d(A).
CheckReport check_schur_analog(const BlockedSpd& ab);

/// lambda((C(G)^{1/2}C(E)C(G)^{1/2})^{1/2}) prec^w lambda((G^{1/2}EG^{1/2})^{1/2}),
/// the G = I specialization, and d(C(E) (+) C(G)) prec^w d(A).
CheckReport check_corollary_pinch(const BlockedSpd& ab, const Partition& p);

/// lambda(C(H)) prec lambda(H), trace equality exact.
CheckReport check_classical_pinching(const SquareMatrix& h, const Partition& p);

/// d(Cs(A)) prec^w d(A).
CheckReport check_spinching_supermajorization(const BlockedSpd& ab, const Partition& p);

/// Williamson residual contract for A (not a paper relation; fuzz support).
CheckReport check_williamson_contract(const SpdMatrix& a);

/// Builds the 4x4 two-block matrix with E = G = [[7,6],[6,7]], F = 0, pinches
/// it relative to (1,3), and confirms d(A) = [1,13],
/// d(C(A)) = [sqrt(7), sqrt(91)], and the supermajorization failure at k = 2.
CheckReport reproduce_example();

// --- ensemble runner -------------------------------------------------------

/// Registry of the ensemble-applicable check names (kebab-case).
std::vector<std::string> known_checks();
bool is_known_check(const std::string& name);

/// Partition set used when a partitioned check runs without an explicit
/// partition: {(n), (1, n-1), (ceil(n/2), floor(n/2)), (1, ..., 1)}, deduplicated.
std::vector<Partition> standard_partitions(int n);

/// One report per (trial, check); per-trial seeds derived from spec.seed.
/// Trials may run in parallel, output order is by (trial, check) regardless.
/// Throws UnknownCheckName.
std::vector<CheckReport> run_ensemble(const EnsembleSpec& spec,
                                      const std::vector<std::string>& checks);

/// Runs a named check against explicit inputs (CLI dispatch).
CheckReport run_named_check(const std::string& name, const BlockedSpd& ab,
                            const std::optional<Partition>& p);

}  // namespace symplectica
