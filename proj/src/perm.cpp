#include "crystal_pop/perm.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>

#include "crystal_pop/error.hpp"
#include "crystal_pop/pop.hpp"

namespace crystal_pop {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int m = size();
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::InvalidArgument,
                  "not a permutation of 1.." + std::to_string(m));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::generator(int i, int m) {
  if (i < 1 || i >= m) {
    throw Error(ErrorCode::InvalidArgument,
                "s_" + std::to_string(i) + " is not a generator of S_" + std::to_string(m));
  }
  return identity(m).times_generator(i);
}

Permutation Permutation::longest(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.rbegin(), v.rend(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  auto parse_token = [&](std::string_view token) {
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError, "bad permutation entry '" + std::string(token) + "'");
    }
    values.push_back(value);
  };
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      std::size_t pos = text.find(',', start);
      parse_token(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw Error(ErrorCode::ParseError,
                    "bad permutation '" + std::string(text) +
                        "'; use digits or a comma-separated list");
      }
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (one_line_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  Permutation out;
  out.one_line_ = std::move(inv);
  return out;
}

Permutation Permutation::times_generator(int i) const {
  Permutation out = *this;
  std::swap(out.one_line_[static_cast<std::size_t>(i - 1)],
            out.one_line_[static_cast<std::size_t>(i)]);
  return out;
}

Permutation Permutation::generator_times(int i) const {
  Permutation out = *this;
  for (int& v : out.one_line_) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  const bool digits = size() <= 9;
  for (std::size_t k = 0; k < one_line_.size(); ++k) {
    if (!digits && k > 0) out += ',';
    out += std::to_string(one_line_[k]);
  }
  return out;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::InvalidArgument, "permutations of different sizes");
  }
  std::vector<int> out(static_cast<std::size_t>(u.size()));
  for (int x = 1; x <= u.size(); ++x) out[static_cast<std::size_t>(x - 1)] = u(v(x));
  return Permutation(std::move(out));
}

int length(const Permutation& w) {
  int inversions = 0;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) inversions += w(i) > w(j) ? 1 : 0;
  }
  return inversions;
}

GeneratorSet right_descents(const Permutation& w) {
  GeneratorSet out;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) out.insert(i);
  }
  return out;
}

GeneratorSet left_descents(const Permutation& w) {
  return right_descents(w.inverse());
}

bool weak_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) return false;
  const Permutation ui = u.inverse();
  const Permutation wi = w.inverse();
  for (int a = 1; a <= u.size(); ++a) {
    for (int b = a + 1; b <= u.size(); ++b) {
      if (ui(a) > ui(b) && !(wi(a) > wi(b))) return false;
    }
  }
  return true;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) return false;
  const int m = u.size();
  // count[j] = #{a <= i : x(a) >= j}, maintained as i grows.
  std::vector<int> cu(static_cast<std::size_t>(m) + 2, 0);
  std::vector<int> cw(static_cast<std::size_t>(m) + 2, 0);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= u(i); ++j) ++cu[static_cast<std::size_t>(j)];
    for (int j = 1; j <= w(i); ++j) ++cw[static_cast<std::size_t>(j)];
    for (int j = 1; j <= m; ++j) {
      if (cu[static_cast<std::size_t>(j)] > cw[static_cast<std::size_t>(j)]) return false;
    }
  }
  return true;
}

namespace {

/// Maximal runs [a, b] of consecutive indices such that s_a, ..., s_{b-1} ∈ J.
std::vector<std::pair<int, int>> generator_blocks(GeneratorSet J, int m) {
  std::vector<std::pair<int, int>> blocks;
  int i = 1;
  while (i < m) {
    if (!J.contains(i)) {
      ++i;
      continue;
    }
    int start = i;
    while (i < m && J.contains(i)) ++i;
    blocks.emplace_back(start, i);
  }
  return blocks;
}

void check_generators(GeneratorSet J, int m) {
  if (!J.is_subset_of(GeneratorSet::range(m - 1))) {
    throw Error(ErrorCode::InvalidArgument,
                "generator set " + J.to_string() + " is not a subset of S for S_" +
                    std::to_string(m));
  }
}

}  // namespace

Permutation longest_parabolic(GeneratorSet J, int m) {
  check_generators(J, m);
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  for (auto [a, b] : generator_blocks(J, m)) {
    std::reverse(v.begin() + (a - 1), v.begin() + b);
  }
  return Permutation(std::move(v));
}

Permutation min_coset_rep(const Permutation& w, GeneratorSet J) {
  const int m = w.size();
  check_generators(J, m);
  // W_J acts on values; within each block of values, the shortest coset
  // member lists them in increasing order of position.
  std::vector<int> out = w.one_line();
  for (auto [a, b] : generator_blocks(J, m)) {
    std::vector<std::size_t> positions;
    for (std::size_t p = 0; p < out.size(); ++p) {
      if (out[p] >= a && out[p] <= b) positions.push_back(p);
    }
    int value = a;
    for (std::size_t p : positions) out[p] = value++;
  }
  return Permutation(std::move(out));
}

std::vector<Permutation> parabolic_quotient(GeneratorSet J, int m) {
  check_generators(J, m);
  std::vector<Permutation> order;
  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  queue.push_back(Permutation::identity(m));
  seen.insert(queue.front());
  while (!queue.empty()) {
    Permutation w = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i < m; ++i) {
      if (w(i) > w(i + 1)) continue;
      Permutation up = w.times_generator(i);
      if (!(left_descents(up) & J).empty()) continue;
      if (seen.insert(up).second) queue.push_back(up);
    }
    order.push_back(std::move(w));
  }
  return order;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> reversed;
  Permutation x = w;
  while (true) {
    GeneratorSet d = right_descents(x);
    if (d.empty()) break;
    int i = d.first();
    reversed.push_back(i);
    x = x.times_generator(i);
  }
  return {reversed.rbegin(), reversed.rend()};
}

bool generators_commute(GeneratorSet s) {
  return (s.mask() & (s.mask() >> 1)) == 0;
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

LemmaReport verify_coxeter_pop_lemmas(int m) {
  if (m < 1 || m > 8) {
    throw Error(ErrorCode::InvalidArgument, "lemma suite supports 1 <= m <= 8");
  }
  LemmaReport report;
  report.m = m;
  const std::vector<Permutation> group = all_permutations(m);
  const int num_generators = m - 1;
  const std::uint32_t num_subsets = 1u << num_generators;

  auto violation = [&](std::string text) {
    if (report.violations.size() < 50) report.violations.push_back(std::move(text));
  };

  std::vector<Permutation> pops;
  pops.reserve(group.size());
  for (const Permutation& w : group) pops.push_back(coxeter_pop(w));

  // Weak-order comparable pairs, reused for every J.
  std::vector<std::pair<std::size_t, std::size_t>> weak_pairs;
  for (std::size_t a = 0; a < group.size(); ++a) {
    for (std::size_t b = 0; b < group.size(); ++b) {
      if (weak_leq(group[a], group[b])) weak_pairs.emplace_back(a, b);
    }
  }

  for (std::uint32_t mask = 0; mask < num_subsets; ++mask) {
    const GeneratorSet J = GeneratorSet::from_mask(mask << 1);
    std::vector<Permutation> reps;
    reps.reserve(group.size());
    for (const Permutation& w : group) reps.push_back(min_coset_rep(w, J));

    for (auto [a, b] : weak_pairs) {
      ++report.checks;
      if (!weak_leq(reps[a], reps[b])) {
        violation("projection not monotone: J=" + J.to_string() + " y=" +
                  group[a].to_string() + " z=" + group[b].to_string());
      }
    }
    for (std::size_t k = 0; k < group.size(); ++k) {
      ++report.checks;
      const Permutation lhs = min_coset_rep(pops[k], J);
      const Permutation rhs = coxeter_pop(reps[k]);
      if (!weak_leq(lhs, rhs)) {
        violation("projection of Pop exceeds Pop of projection: J=" + J.to_string() +
                  " w=" + group[k].to_string());
      }
    }
  }

  for (std::size_t b = 0; b < group.size(); ++b) {
    if (!generators_commute(right_descents(group[b]))) continue;
    for (std::size_t a = 0; a < group.size(); ++a) {
      if (!bruhat_leq(group[a], group[b])) continue;
      ++report.checks;
      if (!bruhat_leq(pops[a], pops[b])) {
        violation("Pop not Bruhat-monotone: x=" + group[a].to_string() +
                  " y=" + group[b].to_string());
      }
    }
  }

  const Permutation w0 = Permutation::longest(m);
  for (int s = 1; s <= num_generators; ++s) {
    const GeneratorSet J = GeneratorSet::range(num_generators) - GeneratorSet{s};
    Permutation x = min_coset_rep(w0, J);
    const int h = m;
    for (int t = 0; t <= h - 1; ++t) {
      ++report.checks;
      if (!generators_commute(right_descents(x))) {
        violation("non-commuting right descents at t=" + std::to_string(t) +
                  " for s_" + std::to_string(s));
      }
      if (t == h - 2 && x.is_identity()) {
        violation("Pop^{h-2}(^J w_0) = e for s_" + std::to_string(s));
      }
      if (t == h - 1 && !x.is_identity()) {
        violation("Pop^{h-1}(^J w_0) != e for s_" + std::to_string(s));
      }
      x = coxeter_pop(x);
    }
  }
  return report;
}

}  // namespace crystal_pop
