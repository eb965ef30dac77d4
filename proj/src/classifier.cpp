#include "crystal_pop/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "crystal_pop/error.hpp"

namespace crystal_pop {

std::string_view to_string(LatticeClause clause) {
  switch (clause) {
    case LatticeClause::RankAtMostTwo: return "rank-at-most-two";
    case LatticeClause::Column: return "column";
    case LatticeClause::TwoOneHook: return "two-one-hook";
    case LatticeClause::TwoColumnHook: return "two-column-hook";
    case LatticeClause::Row: return "row";
    case LatticeClause::Rectangle: return "rectangle";
    case LatticeClause::RowPlusOne: return "row-plus-one";
    case LatticeClause::NearRectangle: return "near-rectangle";
    case LatticeClause::Staircase321: return "staircase-321";
    case LatticeClause::None: return "none";
  }
  return "none";
}

namespace {

bool all_parts_equal(std::span<const int> parts, int value) {
  return std::all_of(parts.begin(), parts.end(), [&](int x) { return x == value; });
}

LatticeClause match_clause(const Partition& lambda) {
  const int n = lambda.rank();
  const int l = lambda.length();
  const auto parts = lambda.parts();
  if (n <= 2) return LatticeClause::RankAtMostTwo;
  if (all_parts_equal(parts, 1)) return LatticeClause::Column;
  if (parts[0] == 2 && l >= 2 && all_parts_equal(parts.subspan(1), 1)) {
    return LatticeClause::TwoOneHook;
  }
  if (l == n) {
    const auto twos = std::count(parts.begin(), parts.end(), 2);
    const auto ones = std::count(parts.begin(), parts.end(), 1);
    if (twos >= 1 && ones >= 1 && twos + ones == l) return LatticeClause::TwoColumnHook;
  }
  if (l == 1) return LatticeClause::Row;
  if (l == n && all_parts_equal(parts, parts[0])) return LatticeClause::Rectangle;
  if (l == 2 && parts[1] == 1) return LatticeClause::RowPlusOne;
  // (k^{n-1}, k-1); for k = 1 this is (1^{n-1}), already a column.
  if (l == n && parts[0] >= 2 && all_parts_equal(parts.first(static_cast<std::size_t>(n - 1)), parts[0]) &&
      parts[static_cast<std::size_t>(n - 1)] == parts[0] - 1) {
    return LatticeClause::NearRectangle;
  }
  if (n == 3 && lambda == Partition({3, 2, 1}, 3)) return LatticeClause::Staircase321;
  return LatticeClause::None;
}

std::vector<int> repeat(int value, int count) {
  return std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), value);
}

std::vector<int> concat(std::initializer_list<std::vector<int>> pieces) {
  std::vector<int> out;
  for (const auto& piece : pieces) out.insert(out.end(), piece.begin(), piece.end());
  return out;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorCode::HypothesisViolated, message);
}

TableauCertificate bowtie(const Partition& shape, std::vector<std::vector<std::vector<int>>> grids,
                          std::string construction) {
  TableauCertificate c;
  c.kind = CertificateKind::Bowtie;
  c.construction = std::move(construction);
  for (const auto& grid : grids) c.tableaux.push_back(validate_tableau(shape, grid));
  return c;
}

std::vector<int> parts_between(const Partition& lambda, int first, int last) {
  std::vector<int> out;
  for (int i = first; i <= last; ++i) out.push_back(lambda.part(i));
  return out;
}

void require_shape(const Tableau& t, const std::vector<int>& parts, int rank,
                   std::string_view what) {
  const auto have = t.shape().parts();
  if (!std::equal(have.begin(), have.end(), parts.begin(), parts.end()) ||
      t.shape().rank() != rank) {
    throw Error(ErrorCode::ShapeMismatch,
                std::string(what) + ": tableau " + t.to_string() + " of shape " +
                    t.shape().to_string() + " at rank " + std::to_string(t.shape().rank()) +
                    " does not fit");
  }
}

/// Carries a certificate on the base shape (lambda_a - t, ..., lambda_{a+m-1} - t)
/// into B_lambda^n.
TableauCertificate lift(const TableauCertificate& base, const Partition& lambda, int a, int m,
                        int columns) {
  const int n = lambda.rank();
  const int l = lambda.length();
  TableauCertificate out{base.kind, {}, base.construction};
  for (const Tableau& t0 : base.tableaux) {
    Tableau t = eta_embed(t0, Partition(parts_between(lambda, a, a + m - 1), t0.shape().rank()),
                          columns);
    int rank = n - l + m;
    t = raise_rank(t, rank);
    for (int k = a + m; k <= l; ++k) {
      t = append_row_embed(t, Partition(parts_between(lambda, a, k), ++rank));
    }
    for (int k = a - 1; k >= 1; --k) {
      t = iota_embed(t, Partition(parts_between(lambda, k, l), ++rank));
    }
    out.tableaux.push_back(std::move(t));
  }
  return out;
}

/// Certificates that need only the shape, tried in a fixed order.
std::optional<TableauCertificate> direct_certificate(const Partition& lambda) {
  const int n = lambda.rank();
  const int l = lambda.length();
  auto part = [&](int i) { return lambda.part(i); };
  if (n < 3) return std::nullopt;

  if (l >= 2 && l < n && part(2) >= 2) {
    const int t = part(2) - 2;
    return lift(bowtie_two_rows(Partition({part(1) - t, 2}, 3)), lambda, 1, 2, t);
  }
  for (int p = 1; p + 2 <= l; ++p) {
    if (part(p) > part(p + 1) && part(p + 2) >= 2) {
      const int t = part(p + 2) - 2;
      return lift(bowtie_descent_above_two(Partition({part(p) - t, part(p + 1) - t, 2}, 3)),
                  lambda, p, 3, t);
    }
  }
  for (int p = 1; p + 2 <= l; ++p) {
    if (part(p) - 2 >= part(p + 1)) {
      const int t = part(p + 2) - 1;
      return lift(bowtie_gap_above(Partition({part(p) - t, part(p + 1) - t, 1}, 3)), lambda, p,
                  3, t);
    }
  }
  if (l >= 4 && n >= 4) {
    int threes = 0;
    while (threes < l && part(threes + 1) == 3) ++threes;
    const bool tail_ok = threes >= 1 && threes <= l - 2 && part(threes + 1) == 2 &&
                         all_parts_equal(lambda.parts().subspan(static_cast<std::size_t>(threes + 1)), 1);
    if (tail_ok) {
      if (threes >= 2) {
        return lift(nojoin_staircase_tail(Partition({3, 3, 2, 1}, 4)), lambda, threes - 1, 4, 0);
      }
      return lift(nojoin_staircase_tail(Partition({3, 2, 1, 1}, 4)), lambda, 1, 4, 0);
    }
  }
  return std::nullopt;
}

TableauCertificate pull_back(const CrystalGraph& b, const CrystalGraph& dual,
                             const TableauCertificate& c, std::string construction) {
  TableauCertificate out{c.kind, {}, std::move(construction)};
  for (const Tableau& t : c.tableaux) {
    const auto id = dual.find(t);
    if (!id) {
      throw Error(ErrorCode::IsomorphismFailure,
                  "dual tableau " + t.to_string() + " is not a vertex of the dual crystal");
    }
    out.tableaux.push_back(b.vertex(*id));
  }
  return out;
}

}  // namespace

Classification predict_lattice(const Partition& lambda) {
  Classification c;
  c.lambda = lambda;
  c.matched_clause = match_clause(lambda);
  c.is_lattice_predicted = c.matched_clause != LatticeClause::None;
  return c;
}

TableauCertificate bowtie_descent_above_two(const Partition& lambda) {
  require(lambda.length() == 3 && lambda.part(3) == 2 && lambda.part(1) > lambda.part(2) &&
              lambda.rank() >= 3,
          "descent-above-two bowtie needs shape (a,b,2) with a > b and n >= 3, got " +
              lambda.to_string());
  const int a = lambda.part(1);
  const int b = lambda.part(2);
  const auto tail = repeat(4, a - b - 1);
  return bowtie(lambda,
                {{concat({repeat(1, b - 1), {2, 2}, tail}), concat({repeat(2, b - 1), {3}}), {3, 4}},
                 {concat({repeat(1, b), {3}, tail}), repeat(2, b), {3, 4}},
                 {concat({repeat(1, b - 1), {2, 3}, tail}), concat({repeat(2, b - 1), {3}}), {3, 4}},
                 {concat({repeat(1, b - 1), {2, 3}, tail}), concat({repeat(2, b - 1), {3}}), {4, 4}}},
                "descent-above-two");
}

TableauCertificate bowtie_gap_above(const Partition& lambda) {
  require(lambda.length() == 3 && lambda.part(3) == 1 && lambda.part(1) - 2 >= lambda.part(2) &&
              lambda.rank() >= 3,
          "gap-above bowtie needs shape (a,b,1) with a - 2 >= b and n >= 3, got " +
              lambda.to_string());
  const int a = lambda.part(1);
  const int b = lambda.part(2);
  const auto second = concat({{2}, repeat(4, b - 1)});
  return bowtie(lambda,
                {{concat({{1, 1}, repeat(3, b - 1), repeat(4, a - b - 1)}), second, {4}},
                 {concat({{1, 1}, repeat(3, b), repeat(4, a - b - 2)}), second, {4}},
                 {concat({{1, 1}, repeat(3, b - 1), repeat(4, a - b - 1)}),
                  concat({{3}, repeat(4, b - 1)}), {4}},
                 {concat({{1}, repeat(3, b), repeat(4, a - b - 1)}), second, {4}}},
                "gap-above");
}

TableauCertificate bowtie_two_rows(const Partition& lambda) {
  require(lambda.length() == 2 && lambda.part(2) == 2 && lambda.rank() >= 3,
          "two-rows bowtie needs shape (a,2) and n >= 3, got " + lambda.to_string() + " at n=" +
              std::to_string(lambda.rank()));
  const int a = lambda.part(1);
  return bowtie(lambda,
                {{concat({repeat(1, a - 1), {3}}), {3, 4}},
                 {concat({repeat(1, a - 1), {2}}), {3, 4}},
                 {concat({repeat(1, a - 1), {3}}), {4, 4}},
                 {concat({repeat(1, a - 2), {2, 3}}), {3, 4}}},
                "two-rows");
}

TableauCertificate nojoin_staircase_tail(const Partition& lambda) {
  TableauCertificate c;
  c.kind = CertificateKind::NoJoinPair;
  c.construction = "staircase-tail";
  require(lambda.rank() >= 4, "staircase-tail pair needs n >= 4");
  if (lambda == Partition({3, 3, 2, 1}, lambda.rank())) {
    c.tableaux.push_back(validate_tableau(lambda, {{1, 2, 2}, {3, 3, 4}, {4, 5}, {5}}));
    c.tableaux.push_back(validate_tableau(lambda, {{1, 2, 3}, {3, 3, 4}, {4, 5}, {5}}));
  } else if (lambda == Partition({3, 2, 1, 1}, lambda.rank())) {
    c.tableaux.push_back(validate_tableau(lambda, {{1, 1, 3}, {2, 5}, {4}, {5}}));
    c.tableaux.push_back(validate_tableau(lambda, {{1, 1, 4}, {2, 5}, {4}, {5}}));
  } else {
    throw Error(ErrorCode::HypothesisViolated,
                "staircase-tail pair needs shape (3,3,2,1) or (3,2,1,1), got " + lambda.to_string());
  }
  return c;
}

TableauCertificate bowtie_gap_below_via_duality(const CrystalGraph& b, int p) {
  const Partition& lambda = b.lambda();
  const int n = lambda.rank();
  require(p >= 1 && p + 2 <= lambda.length() && lambda.part(p) >= lambda.part(p + 1) &&
              lambda.part(p + 1) >= lambda.part(p + 2) + 2,
          "gap-below bowtie needs lambda_p >= lambda_{p+1} >= lambda_{p+2} + 2 at p = " +
              std::to_string(p));
  const Partition dual = dual_partition(lambda);
  const int q = n - p;
  require(q + 2 <= dual.length(),
          "dual shape " + dual.to_string() + " has fewer than " + std::to_string(q + 2) + " rows");
  require(dual.part(q) - 2 >= dual.part(q + 1) && dual.part(q + 1) >= dual.part(q + 2),
          "dual shape " + dual.to_string() + " fails the gap-above inequality");
  const int t = dual.part(q + 2) - 1;
  const TableauCertificate in_dual = lift(
      bowtie_gap_above(Partition({dual.part(q) - t, dual.part(q + 1) - t, 1}, 3)), dual, q, 3, t);
  return pull_back(b, dual_crystal(b), in_dual, "gap-below-via-duality");
}

Tableau iota_embed(const Tableau& t, const Partition& lambda) {
  require_shape(t, parts_between(lambda, 2, lambda.length()), lambda.rank() - 1, "iota_embed");
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(lambda.part(1)), 1);
  for (std::uint8_t x : t.entries()) entries.push_back(static_cast<std::uint8_t>(x + 1));
  return make_tableau_unchecked(lambda, std::move(entries));
}

Tableau append_row_embed(const Tableau& t, const Partition& lambda) {
  require_shape(t, parts_between(lambda, 1, lambda.length() - 1), lambda.rank() - 1,
                "append_row_embed");
  std::vector<std::uint8_t> entries(t.entries().begin(), t.entries().end());
  entries.insert(entries.end(), static_cast<std::size_t>(lambda.part(lambda.length())),
                 static_cast<std::uint8_t>(lambda.max_entry()));
  return make_tableau_unchecked(lambda, std::move(entries));
}

Tableau eta_embed(const Tableau& t, const Partition& lambda, int columns) {
  const int l = lambda.length();
  if (columns < 0 || (l > 0 && columns >= lambda.part(l))) {
    throw Error(ErrorCode::ShapeMismatch, "eta_embed needs 0 <= t < lambda_l");
  }
  std::vector<int> mu;
  for (int i = 1; i <= l; ++i) mu.push_back(lambda.part(i) - columns);
  require_shape(t, mu, lambda.rank(), "eta_embed");
  std::vector<std::uint8_t> entries;
  entries.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 1; i <= l; ++i) {
    entries.insert(entries.end(), static_cast<std::size_t>(columns), static_cast<std::uint8_t>(i));
    const auto row = t.row(i);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return make_tableau_unchecked(lambda, std::move(entries));
}

Tableau raise_rank(const Tableau& t, int rank) {
  if (rank < t.shape().rank()) {
    throw Error(ErrorCode::ShapeMismatch, "raise_rank cannot lower the rank");
  }
  const auto entries = t.entries();
  return make_tableau_unchecked(t.shape().with_rank(rank),
                                std::vector<std::uint8_t>(entries.begin(), entries.end()));
}

std::optional<TableauCertificate> find_certificate(const CrystalGraph& b) {
  const Partition& lambda = b.lambda();
  if (auto c = direct_certificate(lambda)) return c;
  if (lambda.rank() < 3) return std::nullopt;
  for (int p = 1; p + 2 <= lambda.length(); ++p) {
    try {
      return bowtie_gap_below_via_duality(b, p);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HypothesisViolated) throw;
    }
  }
  if (auto c = direct_certificate(dual_partition(lambda))) {
    return pull_back(b, dual_crystal(b), *c, "dual-" + c->construction);
  }
  return std::nullopt;
}

std::optional<TableauCertificate> certificate_for(const CrystalGraph& b,
                                                  const ReachabilityIndex& index) {
  if (auto c = find_certificate(b)) return c;
  if (const auto found = find_bowtie(b, index)) {
    return TableauCertificate{CertificateKind::Bowtie,
                              {b.vertex(found->t1), b.vertex(found->t2), b.vertex(found->u1),
                               b.vertex(found->u2)},
                              "exhaustive-search"};
  }
  const LatticeVerdict verdict = is_lattice(b, index);
  if (verdict.is_lattice || !verdict.witness) return std::nullopt;
  return TableauCertificate{CertificateKind::NoJoinPair,
                            {b.vertex(verdict.witness->first), b.vertex(verdict.witness->second)},
                            "first-pair-without-join"};
}

bool verify_certificate(const CrystalGraph& b, const ReachabilityIndex& index,
                        const TableauCertificate& certificate) {
  std::vector<VertexId> ids;
  for (const Tableau& t : certificate.tableaux) {
    if (!(t.shape() == b.lambda())) return false;
    const auto id = b.find(t);
    if (!id) return false;
    ids.push_back(*id);
  }
  if (certificate.kind == CertificateKind::Bowtie) {
    return ids.size() == 4 && verify_bowtie(b, index, {ids[0], ids[1], ids[2], ids[3]});
  }
  return ids.size() == 2 && !index.comparable(ids[0], ids[1]) && !join(index, ids[0], ids[1]);
}

namespace {

SweepRow sweep_one(const Partition& lambda, std::size_t vertex_cap) {
  SweepRow row;
  row.lambda = lambda;
  const Classification predicted = predict_lattice(lambda);
  row.predicted = predicted.is_lattice_predicted;
  row.clause = predicted.matched_clause;
  if (hook_content_count(lambda) > vertex_cap) {
    row.skipped = true;
    return row;
  }
  const auto start = std::chrono::steady_clock::now();
  const CrystalGraph b = generate_crystal(lambda, vertex_cap);
  const ReachabilityIndex index(b);
  row.vertices = b.size();
  row.brute_force = is_lattice(b, index).is_lattice;
  if (!row.brute_force) {
    if (const auto c = certificate_for(b, index)) {
      row.certificate = c->construction;
      row.certificate_verified = verify_certificate(b, index, *c);
    }
  }
  row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
  return row;
}

}  // namespace

SweepReport classification_sweep(int max_n, int max_cells, std::size_t vertex_cap,
                                 unsigned jobs) {
  if (max_n < 1 || max_cells < 1) {
    throw Error(ErrorCode::InvalidArgument, "sweep bounds must be positive");
  }
  std::vector<Partition> tasks;
  for (int n = 1; n <= max_n; ++n) {
    for (int cells = 1; cells <= max_cells; ++cells) {
      for (Partition& lambda : partitions_of(cells, n)) tasks.push_back(std::move(lambda));
    }
  }

  SweepReport report;
  report.rows.resize(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) {
      try {
        report.rows[k] = sweep_one(tasks[k], vertex_cap);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  for (const SweepRow& row : report.rows) {
    if (row.skipped) {
      ++report.skipped;
      continue;
    }
    if (row.predicted != row.brute_force) ++report.disagreements;
    if (!row.brute_force && !row.certificate_verified) ++report.certificate_failures;
  }
  return report;
}

}  // namespace crystal_pop
