#include "crystal_pop/key.hpp"

#include <bit>
#include <string>

#include "crystal_pop/error.hpp"
#include "crystal_pop/pop.hpp"

namespace crystal_pop {

std::optional<std::size_t> DemazureFamily::index_of(const Permutation& w) const {
  const auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool DemazureFamily::contains(std::size_t element, VertexId v) const {
  const auto bit = static_cast<std::size_t>(v);
  return ((bits_[element * words_ + bit / 64] >> (bit % 64)) & 1u) != 0;
}

std::size_t DemazureFamily::set_size(std::size_t element) const {
  std::size_t total = 0;
  for (std::size_t k = 0; k < words_; ++k) {
    total += static_cast<std::size_t>(std::popcount(bits_[element * words_ + k]));
  }
  return total;
}

std::vector<VertexId> DemazureFamily::members(std::size_t element) const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < num_vertices_; ++v) {
    if (contains(element, static_cast<VertexId>(v))) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

bool DemazureFamily::is_subset(std::size_t a, std::size_t b) const {
  for (std::size_t k = 0; k < words_; ++k) {
    if ((bits_[a * words_ + k] & ~bits_[b * words_ + k]) != 0) return false;
  }
  return true;
}

std::vector<std::size_t> DemazureFamily::memberships(VertexId v) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (contains(k, v)) out.push_back(k);
  }
  return out;
}

DemazureFamily build_demazure_family(const CrystalGraph& b) {
  DemazureFamily family;
  const int m = b.rank() + 1;
  family.elements_ = parabolic_quotient(stabilizer_colors(b.lambda()), m);
  family.num_vertices_ = b.size();
  family.words_ = (b.size() + 63) / 64;
  family.bits_.assign(family.elements_.size() * family.words_, 0);
  for (std::size_t k = 0; k < family.elements_.size(); ++k) {
    family.index_.emplace(family.elements_[k], k);
  }

  const auto min_bit = static_cast<std::size_t>(b.min_vertex());
  family.bits_[min_bit / 64] |= std::uint64_t{1} << (min_bit % 64);

  std::vector<std::uint64_t> closure(family.words_);
  for (std::size_t k = 1; k < family.elements_.size(); ++k) {
    const Permutation& w = family.elements_[k];
    bool first = true;
    for (int i : right_descents(w).to_vector()) {
      const auto lower = family.index_of(w.times_generator(i));
      if (!lower) continue;
      std::fill(closure.begin(), closure.end(), 0);
      for (VertexId v : family.members(*lower)) {
        for (VertexId x = v; x >= 0; x = b.succ_raw(x, i)) {
          const auto bit = static_cast<std::size_t>(x);
          closure[bit / 64] |= std::uint64_t{1} << (bit % 64);
        }
      }
      std::uint64_t* row = family.bits_.data() + k * family.words_;
      if (first) {
        std::copy(closure.begin(), closure.end(), row);
        first = false;
      } else if (!std::equal(closure.begin(), closure.end(), row)) {
        throw Error(ErrorCode::InconsistentFamily,
                    "Demazure set of " + w.to_string() + " depends on the cover used");
      }
    }
    if (first) {
      throw Error(ErrorCode::InconsistentFamily,
                  "quotient element " + w.to_string() + " has no lower cover in the quotient");
    }
  }
  return family;
}

Permutation key_map(const DemazureFamily& family, VertexId v) {
  const auto candidates = family.memberships(v);
  if (candidates.empty()) {
    throw Error(ErrorCode::NonUniqueMinimum,
                "vertex " + std::to_string(v) + " lies in no Demazure set");
  }
  // Elements are listed by length, so a Bruhat minimum must come first.
  const Permutation& least = family.elements()[candidates.front()];
  for (std::size_t k : candidates) {
    if (!bruhat_leq(least, family.elements()[k])) {
      throw Error(ErrorCode::NonUniqueMinimum,
                  "vertex " + std::to_string(v) + " has no Bruhat-least Demazure set");
    }
  }
  return least;
}

std::vector<Permutation> key_map_all(const DemazureFamily& family) {
  std::vector<Permutation> out;
  out.reserve(family.num_vertices());
  for (std::size_t v = 0; v < family.num_vertices(); ++v) {
    out.push_back(key_map(family, static_cast<VertexId>(v)));
  }
  return out;
}

std::vector<Permutation> weak_minimal_keys(const DemazureFamily& family, VertexId v) {
  const auto candidates = family.memberships(v);
  std::vector<Permutation> out;
  for (std::size_t a : candidates) {
    bool minimal = true;
    for (std::size_t c : candidates) {
      if (c != a && weak_leq(family.elements()[c], family.elements()[a])) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(family.elements()[a]);
  }
  return out;
}

namespace {

std::string describe(const CrystalGraph& b, VertexId v) { return b.vertex(v).to_string(); }

}  // namespace

KeyReport verify_key_properties(const CrystalGraph& b, const DemazureFamily& family) {
  KeyReport report;
  auto check = [&](bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) report.violations.push_back(what);
  };

  const auto& elements = family.elements();
  check(family.set_size(0) == 1 && family.contains(0, b.min_vertex()), "D_e != {T_min}");
  check(family.set_size(elements.size() - 1) == b.size(), "top Demazure set is not everything");
  for (std::size_t u = 0; u < elements.size(); ++u) {
    for (std::size_t w = 0; w < elements.size(); ++w) {
      if (weak_leq(elements[u], elements[w])) {
        check(family.is_subset(u, w), "D_" + elements[u].to_string() + " not inside D_" +
                                          elements[w].to_string());
      }
    }
  }

  const std::vector<Permutation> kappa = key_map_all(family);
  const auto n = static_cast<VertexId>(b.size());
  for (VertexId v = 0; v < n; ++v) {
    const Permutation& k = kappa[static_cast<std::size_t>(v)];
    check(!k.is_identity() || v == b.min_vertex(), "kappa(" + describe(b, v) + ") = e");
    const GeneratorSet descents = right_descents(k);
    for (int i = 1; i <= b.num_colors(); ++i) {
      const VertexId up = b.succ_raw(v, i);
      const bool has_e = b.pred_raw(v, i) >= 0;
      const std::string at = " at " + describe(b, v) + ", color " + std::to_string(i);
      if (descents.contains(i)) check(has_e, "descent without E" + at);
      if (up < 0) continue;
      const Permutation& k_up = kappa[static_cast<std::size_t>(up)];
      if (has_e) {
        check(k_up == k, "kappa changes inside an i-string" + at);
      } else {
        check(k_up == k || k_up == k.times_generator(i), "kappa jumps" + at);
      }
      check(weak_leq(k, k_up), "kappa not order preserving" + at);
    }
  }
  return report;
}

KeyReport verify_pop_key_inequality(const CrystalGraph& b, const DemazureFamily& family) {
  KeyReport report;
  const std::vector<Permutation> kappa = key_map_all(family);
  for (VertexId v = 0; v < static_cast<VertexId>(b.size()); ++v) {
    ++report.checks;
    const Permutation& lhs = kappa[static_cast<std::size_t>(pop_crystal(b, v))];
    const Permutation rhs = coxeter_pop(kappa[static_cast<std::size_t>(v)]);
    if (!weak_leq(lhs, rhs)) {
      report.violations.push_back("kappa(Pop(" + b.vertex(v).to_string() + ")) = " +
                                  lhs.to_string() + " not below " + rhs.to_string());
    }
  }
  return report;
}

}  // namespace crystal_pop
