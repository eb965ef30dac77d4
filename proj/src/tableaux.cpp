#include "crystal_pop/tableaux.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>

#include "crystal_pop/error.hpp"

namespace crystal_pop {

namespace {

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || token.empty()) {
    throw Error(ErrorCode::ParseError,
                "expected an integer in '" + std::string(context) + "', got '" +
                    std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

void add_factors(std::map<int, int>& exponents, int value, int sign) {
  for (int p = 2; p * p <= value; ++p) {
    while (value % p == 0) {
      exponents[p] += sign;
      value /= p;
    }
  }
  if (value > 1) exponents[value] += sign;
}

}  // namespace

Partition::Partition() : offsets_{0}, rank_(1) {}

Partition::Partition(std::vector<int> parts, int rank) : rank_(rank) {
  if (rank < 1) {
    throw Error(ErrorCode::InvalidPartition,
                "rank n must be positive, got " + std::to_string(rank));
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) {
      throw Error(ErrorCode::InvalidPartition, "parts must be positive");
    }
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw Error(ErrorCode::InvalidPartition, "parts must be weakly decreasing");
    }
  }
  if (static_cast<int>(parts.size()) > rank) {
    throw Error(ErrorCode::InvalidPartition,
                "a dominant weight of rank " + std::to_string(rank) +
                    " has at most " + std::to_string(rank) + " parts");
  }
  parts_ = std::move(parts);
  offsets_.assign(parts_.size() + 1, 0);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    offsets_[i + 1] = offsets_[i] + parts_[i];
  }
}

Partition Partition::parse(std::string_view text, int rank) {
  text = trim(text);
  std::vector<int> parts;
  if (!text.empty()) {
    for (std::string_view token : split(text, ',')) {
      parts.push_back(parse_int(trim(token), text));
    }
  }
  return Partition(std::move(parts), rank);
}

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition dual_partition(const Partition& lambda) {
  const int n = lambda.rank();
  std::vector<int> parts(static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= n + 1; ++i) {
    parts[static_cast<std::size_t>(i - 1)] = lambda.part(1) - lambda.part(n + 2 - i);
  }
  return Partition(std::move(parts), n);
}

std::uint64_t hook_content_count(const Partition& lambda) {
  const int big_n = lambda.rank() + 1;
  std::map<int, int> exponents;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      int arm = lambda.part(i) - j;
      int leg = 0;
      while (lambda.part(i + leg + 1) >= j) ++leg;
      const int content = j - i;
      add_factors(exponents, big_n + content, +1);
      add_factors(exponents, arm + leg + 1, -1);
    }
  }
  std::uint64_t result = 1;
  for (auto [prime, e] : exponents) {
    if (e < 0) {
      throw Error(ErrorCode::InvalidArgument, "hook-content product is not integral");
    }
    for (int k = 0; k < e; ++k) {
      if (result > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(prime)) {
        throw Error(ErrorCode::SizeLimitExceeded,
                    "hook-content count of " + lambda.to_string() + " does not fit in 64 bits");
      }
      result *= static_cast<std::uint64_t>(prime);
    }
  }
  return result;
}

Tableau make_tableau_unchecked(Partition shape, std::vector<std::uint8_t> entries) {
  return Tableau(std::move(shape), std::move(entries));
}

std::span<const std::uint8_t> Tableau::row(int r) const {
  return std::span<const std::uint8_t>(entries_).subspan(
      static_cast<std::size_t>(shape_.row_offset(r)),
      static_cast<std::size_t>(shape_.part(r)));
}

std::string Tableau::to_string() const {
  std::string out;
  for (int r = 1; r <= rows(); ++r) {
    if (r > 1) out += '/';
    bool first = true;
    for (std::uint8_t v : row(r)) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
  }
  return out;
}

Tableau Tableau::with_entry(int flat, int value) const {
  Tableau copy = *this;
  copy.entries_[static_cast<std::size_t>(flat)] = static_cast<std::uint8_t>(value);
  return copy;
}

Tableau validate_tableau(const Partition& shape,
                         const std::vector<std::vector<int>>& grid) {
  if (static_cast<int>(grid.size()) != shape.length()) {
    throw Error(ErrorCode::ShapeMismatch,
                "grid has " + std::to_string(grid.size()) + " rows, shape " +
                    shape.to_string() + " has " + std::to_string(shape.length()));
  }
  std::vector<std::uint8_t> entries;
  entries.reserve(static_cast<std::size_t>(shape.size()));
  for (int i = 1; i <= shape.length(); ++i) {
    const auto& row = grid[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != shape.part(i)) {
      throw Error(ErrorCode::ShapeMismatch,
                  "row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                      " cells, expected " + std::to_string(shape.part(i)));
    }
    for (int j = 1; j <= shape.part(i); ++j) {
      const int v = row[static_cast<std::size_t>(j - 1)];
      if (v < 1 || v > shape.max_entry()) {
        throw Error(ErrorCode::EntryOutOfRange,
                    "entry " + std::to_string(v) + " outside [1," +
                        std::to_string(shape.max_entry()) + "]",
                    Cell{i, j});
      }
      if (j > 1 && row[static_cast<std::size_t>(j - 2)] > v) {
        throw Error(ErrorCode::RowViolation, "row is not weakly increasing", Cell{i, j});
      }
      if (i > 1 && grid[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)] >= v) {
        throw Error(ErrorCode::ColumnViolation, "column is not strictly increasing",
                    Cell{i, j});
      }
      entries.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return make_tableau_unchecked(shape, std::move(entries));
}

Tableau parse_tableau(std::string_view text, int rank) {
  text = trim(text);
  std::vector<std::vector<int>> grid;
  std::vector<int> parts;
  if (!text.empty()) {
    for (std::string_view row_text : split(text, '/')) {
      std::vector<int> row;
      for (std::string_view token : split(trim(row_text), ',')) {
        row.push_back(parse_int(trim(token), text));
      }
      parts.push_back(static_cast<int>(row.size()));
      grid.push_back(std::move(row));
    }
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) {
      throw Error(ErrorCode::ShapeMismatch,
                  "row lengths of '" + std::string(text) + "' are not a partition");
    }
  }
  return validate_tableau(Partition(std::move(parts), rank), grid);
}

Tableau highest_weight_tableau(const Partition& lambda) {
  std::vector<std::uint8_t> entries;
  entries.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 1; i <= lambda.length(); ++i) {
    entries.insert(entries.end(), static_cast<std::size_t>(lambda.part(i)),
                   static_cast<std::uint8_t>(i));
  }
  return make_tableau_unchecked(lambda, std::move(entries));
}

std::vector<int> reading_order(const Partition& shape) {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(shape.size()));
  for (int i = shape.length(); i >= 1; --i) {
    for (int j = 0; j < shape.part(i); ++j) order.push_back(shape.row_offset(i) + j);
  }
  return order;
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> word;
  word.reserve(t.entries().size());
  for (int flat : reading_order(t.shape())) {
    word.push_back(t.entries()[static_cast<std::size_t>(flat)]);
  }
  return word;
}

WeightVector weight(const Tableau& t) {
  WeightVector w;
  w.counts.assign(static_cast<std::size_t>(t.shape().max_entry()), 0);
  for (std::uint8_t v : t.entries()) ++w.counts[static_cast<std::size_t>(v - 1)];
  return w;
}

}  // namespace crystal_pop

namespace crystal_pop {

namespace {

void extend_partitions(int remaining, int largest, int rank, std::vector<int>& parts,
                       std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(parts, rank);
    return;
  }
  if (static_cast<int>(parts.size()) == rank) return;
  for (int p = std::min(remaining, largest); p >= 1; --p) {
    parts.push_back(p);
    extend_partitions(remaining - p, p, rank, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int cells, int rank) {
  if (cells < 0 || rank < 1) {
    throw Error(ErrorCode::InvalidArgument, "partitions_of needs cells >= 0 and rank >= 1");
  }
  std::vector<Partition> out;
  std::vector<int> parts;
  extend_partitions(cells, cells, rank, parts, out);
  return out;
}

}  // namespace crystal_pop
