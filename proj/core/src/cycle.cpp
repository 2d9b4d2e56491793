#include "cyclic/cycle.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "cyclic/error.hpp"

namespace cyclic {
namespace {

struct Token {
  int value;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view text, bool parenthesized) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) ||
            text[i] == ','))
      ++i;
  };

  skip_space();
  bool open = false;
  if (parenthesized && i < text.size() && text[i] == '(') {
    open = true;
    ++i;
  }
  while (true) {
    skip_space();
    if (i == text.size()) break;
    const char c = text[i];
    if (c == ')') {
      if (!open) throw ParseError("unmatched ')'", i);
      open = false;
      ++i;
      skip_space();
      if (i != text.size()) throw ParseError("trailing characters", i);
      break;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    const std::size_t start = i;
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw ParseError("symbol too large", start);
      ++i;
    }
    tokens.push_back({static_cast<int>(value), start});
  }
  if (open) throw ParseError("missing ')'", text.size());
  if (tokens.empty()) throw ParseError("empty cycle", 0);
  return tokens;
}

// Positions of duplicate or out-of-range symbols are reported via `where`.
void check_permutation(std::span<const int> values,
                       std::span<const std::size_t> where) {
  const int q = static_cast<int>(values.size());
  std::vector<bool> seen(q + 1, false);
  for (std::size_t t = 0; t < values.size(); ++t) {
    const int v = values[t];
    const std::size_t pos = where.empty() ? t : where[t];
    if (v < 1 || v > q)
      throw ParseError("symbol " + std::to_string(v) + " outside 1.." +
                           std::to_string(q),
                       pos);
    if (seen[v])
      throw ParseError("duplicate symbol " + std::to_string(v), pos);
    seen[v] = true;
  }
}

bool is_single_cycle(const std::vector<int>& table) {
  const int q = static_cast<int>(table.size());
  int x = 1;
  for (int step = 1; step <= q; ++step) {
    x = table[x - 1];
    if (x == 1) return step == q;
  }
  return false;
}

Cycle from_notation_checked(std::span<const int> symbols,
                            std::span<const std::size_t> where) {
  check_permutation(symbols, where);
  if (symbols.front() != 1)
    throw ParseError("cycle notation must start with 1",
                     where.empty() ? 0 : where.front());
  return Cycle::from_cycle_notation(symbols);
}

}  // namespace

Cycle Cycle::from_cycle_notation(std::span<const int> symbols) {
  if (symbols.empty()) throw InvalidArgument("empty cycle");
  check_permutation(symbols, {});
  if (symbols.front() != 1)
    throw InvalidArgument("cycle notation must start with 1");
  const std::size_t q = symbols.size();
  std::vector<int> table(q);
  for (std::size_t t = 0; t < q; ++t)
    table[symbols[t] - 1] = symbols[(t + 1) % q];
  return Cycle(std::move(table));
}

Cycle Cycle::from_one_line(std::span<const int> images) {
  if (images.empty()) throw InvalidArgument("empty permutation");
  check_permutation(images, {});
  std::vector<int> table(images.begin(), images.end());
  if (!is_single_cycle(table))
    throw InvalidArgument("permutation is not a single q-cycle");
  return Cycle(std::move(table));
}

Cycle Cycle::parse(std::string_view text) {
  const auto tokens = tokenize(text, true);
  std::vector<int> values;
  std::vector<std::size_t> where;
  for (const auto& t : tokens) {
    values.push_back(t.value);
    where.push_back(t.position);
  }
  return from_notation_checked(values, where);
}

Cycle Cycle::parse_one_line(std::string_view text) {
  const auto tokens = tokenize(text, false);
  std::vector<int> values;
  std::vector<std::size_t> where;
  for (const auto& t : tokens) {
    values.push_back(t.value);
    where.push_back(t.position);
  }
  check_permutation(values, where);
  if (!is_single_cycle(values))
    throw ParseError("permutation is not a single q-cycle", 0);
  return Cycle(std::move(values));
}

Cycle Cycle::rho(int q) {
  if (q < 1) throw InvalidArgument("q must be positive");
  std::vector<int> table(q);
  for (int i = 1; i <= q; ++i) table[i - 1] = i % q + 1;
  return Cycle(std::move(table));
}

Cycle Cycle::rotation(int q, int p) {
  if (q < 2 || p < 1 || p >= q)
    throw InvalidArgument("rotation requires 1 <= p < q");
  if (std::gcd(p, q) != 1)
    throw InvalidArgument("gcd(p, q) != 1: rho^p is not a q-cycle");
  std::vector<int> table(q);
  for (int i = 1; i <= q; ++i) table[i - 1] = (i - 1 + p) % q + 1;
  return Cycle(std::move(table));
}

std::vector<int> Cycle::cycle_notation() const {
  std::vector<int> out;
  out.reserve(table_.size());
  int x = 1;
  do {
    out.push_back(x);
    x = table_[x - 1];
  } while (x != 1);
  return out;
}

std::string Cycle::to_string() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int s : cycle_notation()) {
    if (!first) os << ' ';
    os << s;
    first = false;
  }
  os << ')';
  return os.str();
}

std::string Cycle::to_one_line_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i) os << ' ';
    os << table_[i];
  }
  return os.str();
}

int descent(const Cycle& sigma) {
  const int q = sigma.q();
  int count = 0;
  for (int i = 1; i <= q; ++i)
    if (sigma(i) > sigma(i + 1)) ++count;
  return count;
}

Cycle conjugate_by_rotation(const Cycle& sigma, int j) {
  const int q = sigma.q();
  std::vector<int> images(q);
  for (int i = 1; i <= q; ++i) images[i - 1] = sigma.wrap(sigma(i + j) - j);
  return Cycle::from_one_line(images);
}

int symmetry_order(const Cycle& sigma) {
  int s = 0;
  for (int j = 0; j < sigma.q(); ++j)
    if (conjugate_by_rotation(sigma, j) == sigma) ++s;
  return s;
}

bool is_rotation_cycle(const Cycle& sigma) {
  return rotation_power(sigma).has_value();
}

std::optional<int> rotation_power(const Cycle& sigma) {
  const int q = sigma.q();
  const int p = sigma(q) % q;
  if (q == 1) return std::nullopt;
  for (int i = 1; i <= q; ++i)
    if (sigma(i) != sigma.wrap(i + p)) return std::nullopt;
  return p;
}

CombinatorialType combinatorial_type(const Cycle& sigma) {
  const int s = symmetry_order(sigma);
  const int r = sigma.q() / s;
  std::vector<Cycle> reps;
  reps.reserve(r);
  for (int j = 0; j < r; ++j) reps.push_back(conjugate_by_rotation(sigma, j));
  Cycle canonical = *std::min_element(reps.begin(), reps.end());
  return CombinatorialType{std::move(reps), std::move(canonical), s};
}

Cycle canonical_representative(const Cycle& sigma) {
  Cycle best = sigma;
  for (int j = 1; j < sigma.q(); ++j) {
    Cycle c = conjugate_by_rotation(sigma, j);
    if (c < best) best = std::move(c);
  }
  return best;
}

std::vector<Cycle> all_cycles(int q, int bound) {
  if (q < 1) throw InvalidArgument("q must be positive");
  if (q > bound)
    throw InvalidArgument("q = " + std::to_string(q) +
                          " exceeds the enumeration bound " +
                          std::to_string(bound));
  std::vector<int> tail(q - 1);
  std::iota(tail.begin(), tail.end(), 2);
  std::vector<Cycle> out;
  std::vector<int> symbols(q);
  symbols[0] = 1;
  do {
    std::copy(tail.begin(), tail.end(), symbols.begin() + 1);
    out.push_back(Cycle::from_cycle_notation(symbols));
  } while (std::next_permutation(tail.begin(), tail.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CombinatorialType> enumerate_types(int q, int bound) {
  if (q < 2) throw InvalidArgument("enumerate_types requires q >= 2");
  const auto cycles = all_cycles(q, bound);
  std::set<Cycle> assigned;
  std::vector<CombinatorialType> types;
  // `cycles` is sorted, so the first unassigned member of each type is its
  // canonical representative and types come out in canonical order.
  for (const auto& sigma : cycles) {
    if (assigned.contains(sigma)) continue;
    auto type = combinatorial_type(sigma);
    for (const auto& rep : type.representatives) assigned.insert(rep);
    types.push_back(std::move(type));
  }
  return types;
}

}  // namespace cyclic
