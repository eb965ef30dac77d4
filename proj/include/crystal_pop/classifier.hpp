#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crystal_pop/crystal.hpp"
#include "crystal_pop/poset.hpp"
#include "crystal_pop/tableaux.hpp"

namespace crystal_pop {

/// The shape families whose crystals are lattices, in the order they are
/// tested.
enum class LatticeClause {
  RankAtMostTwo,  ///< n <= 2
  Column,         ///< (1^m), 0 <= m <= n
  TwoOneHook,     ///< (2,1^m), 1 <= m <= n-1
  TwoColumnHook,  ///< (2^{n-m},1^m), 1 <= m <= n-1
  Row,            ///< (k)
  Rectangle,      ///< (k^n)
  RowPlusOne,     ///< (k,1)
  NearRectangle,  ///< (k^{n-1},k-1)
  Staircase321,   ///< (3,2,1) with n = 3
  None,
};

std::string_view to_string(LatticeClause clause);

struct Classification {
  Partition lambda;
  bool is_lattice_predicted = false;
  LatticeClause matched_clause = LatticeClause::None;
};

/// Closed-form lattice test for B_lambda^n, n = lambda.rank().
Classification predict_lattice(const Partition& lambda);

enum class CertificateKind { Bowtie, NoJoinPair };

/// Tableaux witnessing that a crystal is not a lattice: (T1, T2, U1, U2) for
/// a bowtie, or two tableaux without a join.
struct TableauCertificate {
  CertificateKind kind = CertificateKind::Bowtie;
  std::vector<Tableau> tableaux;
  /// Name of the construction that produced it.
  std::string construction;
};

/// Bowtie in B_{(a,b,2)}^n for a > b >= 2, n >= 3.
TableauCertificate bowtie_descent_above_two(const Partition& lambda);

/// Bowtie in B_{(a,b,1)}^n for a - 2 >= b >= 1, n >= 3.
TableauCertificate bowtie_gap_above(const Partition& lambda);

/// Bowtie in B_{(a,2)}^n for a >= 2, n >= 3.
TableauCertificate bowtie_two_rows(const Partition& lambda);

/// Pair without a join in B_{(3,3,2,1)}^n or B_{(3,2,1,1)}^n, n >= 4.
TableauCertificate nojoin_staircase_tail(const Partition& lambda);

/// For lambda_p >= lambda_{p+1} >= lambda_{p+2} + 2: builds the gap-above
/// bowtie in B_{lambda*}^n at rows n-p..n-p+2 and pulls it back through
/// the duality isomorphism. Throws Error(HypothesisViolated) when lambda
/// fails the inequality or lambda* has fewer than n-p+2 rows.
TableauCertificate bowtie_gap_below_via_duality(const CrystalGraph& b, int p);

/// B_mu^{n-1} -> B_lambda^n for mu = (lambda_2, ...): a new first row of 1s,
/// every other entry raised by one. Throws Error(ShapeMismatch).
Tableau iota_embed(const Tableau& t, const Partition& lambda);

/// B_mu^{n-1} -> B_lambda^n for mu = (lambda_1, ..., lambda_{l-1}): a new last
/// row filled with n+1. Throws Error(ShapeMismatch).
Tableau append_row_embed(const Tableau& t, const Partition& lambda);

/// B_mu^n -> B_lambda^n for mu_i = lambda_i - t, t < lambda_l: t leading
/// columns with row i filled with i. Throws Error(ShapeMismatch).
Tableau eta_embed(const Tableau& t, const Partition& lambda, int columns);

/// B_mu^r -> B_mu^n for r <= n, the identity on tableaux.
Tableau raise_rank(const Tableau& t, int rank);

/// A certificate for B_lambda^n when one of the non-lattice constructions
/// applies, reduced to a small base shape and lifted back. Falls back to the
/// constructions for lambda* pulled back through duality. nullopt when
/// nothing applies.
std::optional<TableauCertificate> find_certificate(const CrystalGraph& b);

/// find_certificate, falling back to an exhaustive bowtie search and then to
/// the first pair without a join. nullopt only for lattices.
std::optional<TableauCertificate> certificate_for(const CrystalGraph& b,
                                                  const ReachabilityIndex& index);

/// Checks a certificate against the crystal by brute force.
bool verify_certificate(const CrystalGraph& b, const ReachabilityIndex& index,
                        const TableauCertificate& certificate);

struct SweepRow {
  Partition lambda;
  bool skipped = false;  ///< crystal exceeded the vertex cap
  bool predicted = false;
  bool brute_force = false;
  LatticeClause clause = LatticeClause::None;
  std::size_t vertices = 0;
  double millis = 0.0;
  /// Construction name of the certificate for non-lattices, empty otherwise.
  std::string certificate;
  bool certificate_verified = false;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::size_t disagreements = 0;
  /// Non-lattices with no certificate or one that fails verification.
  std::size_t certificate_failures = 0;
  std::size_t skipped = 0;
};

/// Compares predict_lattice with is_lattice for every lambda with
/// 1 <= |lambda| <= max_cells and every rank 1..max_n. Rows are in
/// (n, |lambda|, lambda descending) order regardless of `jobs`.
SweepReport classification_sweep(int max_n, int max_cells, std::size_t vertex_cap,
                                 unsigned jobs = 1);

}  // namespace crystal_pop
