#include "vcgroup/group.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <variant>

#include "vcgroup/error.hpp"

namespace vcgroup {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_order: return "invalid-order";
    case Errc::capacity: return "capacity";
    case Errc::validation: return "validation";
    case Errc::dimension: return "dimension";
    case Errc::precondition: return "precondition";
    case Errc::domain: return "domain";
    case Errc::resource: return "resource";
    case Errc::undefined_family: return "undefined-family";
    case Errc::io: return "io";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

namespace detail {

struct Cyclic {
  Element n;
};

struct Dihedral {
  Element n;  // number of rotations
};

struct Product {
  FiniteGroup left, right;
};

struct Table {
  Element n;
  std::vector<Element> cells;  // row-major
  std::vector<Element> inverse;
  Element identity;
};

struct GroupImpl {
  std::variant<Cyclic, Dihedral, Product, Table> rep;
  std::size_t order;
  std::string descriptor;
  bool abelian;
};

}  // namespace detail

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::size_t kExhaustiveAssociativity = 64;
constexpr std::size_t kExhaustiveCommutativity = 2048;
constexpr std::size_t kSampledTriples = 100000;

void check_order(std::size_t n) {
  if (n > kMaxGroupOrder) {
    throw Error(Errc::capacity, "group order " + std::to_string(n) +
                                    " exceeds the supported maximum " +
                                    std::to_string(kMaxGroupOrder));
  }
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Scans the operation for the first axiom violation. `op` must be total on
// [0,n)^2 and return values already known to lie in [0,n).
template <class Op>
std::optional<AxiomViolation> scan_axioms(std::size_t n, Op op) {
  std::vector<Element> seen(n, 0);
  Element stamp = 0;
  for (Element a = 0; a < n; ++a) {
    ++stamp;
    std::vector<Element> where(n, 0);
    for (Element b = 0; b < n; ++b) {
      Element v = op(a, b);
      if (seen[v] == stamp) {
        return AxiomViolation{GroupAxiom::latin_square, a, where[v], b};
      }
      seen[v] = stamp;
      where[v] = b;
    }
  }
  for (Element b = 0; b < n; ++b) {
    ++stamp;
    std::vector<Element> where(n, 0);
    for (Element a = 0; a < n; ++a) {
      Element v = op(a, b);
      if (seen[v] == stamp) {
        return AxiomViolation{GroupAxiom::latin_square, where[v], a, b};
      }
      seen[v] = stamp;
      where[v] = a;
    }
  }

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = op(e, a) == a && op(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) return AxiomViolation{GroupAxiom::identity, 0, 0, 0};

  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) {
      found = op(a, b) == *identity && op(b, a) == *identity;
    }
    if (!found) return AxiomViolation{GroupAxiom::inverse, a, 0, 0};
  }

  auto assoc = [&](Element a, Element b, Element c) {
    return op(op(a, b), c) == op(a, op(b, c));
  };
  if (n <= kExhaustiveAssociativity) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!assoc(a, b, c)) {
            return AxiomViolation{GroupAxiom::associativity, a, b, c};
          }
  } else {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t i = 0; i < kSampledTriples; ++i) {
      Element a = pick(rng), b = pick(rng), c = pick(rng);
      if (!assoc(a, b, c)) {
        return AxiomViolation{GroupAxiom::associativity, a, b, c};
      }
    }
  }
  return std::nullopt;
}

template <class Op>
bool scan_commutative(std::size_t n, Op op) {
  if (n <= kExhaustiveCommutativity) {
    for (Element a = 0; a < n; ++a)
      for (Element b = a + 1; b < n; ++b)
        if (op(a, b) != op(b, a)) return false;
    return true;
  }
  std::mt19937_64 rng(0xab11a5ULL);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < kSampledTriples; ++i) {
    Element a = pick(rng), b = pick(rng);
    if (op(a, b) != op(b, a)) return false;
  }
  return true;
}

}  // namespace

std::string AxiomViolation::message() const {
  auto w = [](Element x) { return std::to_string(x); };
  switch (axiom) {
    case GroupAxiom::closure:
      return "closure violated: entry at (" + w(a) + "," + w(b) +
             ") is out of range";
    case GroupAxiom::latin_square:
      return "latin-square violated: repeated entry, witness (" + w(a) + "," +
             w(b) + "," + w(c) + ")";
    case GroupAxiom::identity:
      return "identity violated: no two-sided identity element";
    case GroupAxiom::inverse:
      return "inverse violated: element " + w(a) + " has no inverse";
    case GroupAxiom::associativity:
      return "associativity violated at (" + w(a) + "," + w(b) + "," + w(c) +
             ")";
  }
  return "unknown axiom";
}

std::size_t FiniteGroup::order() const { return impl_->order; }

const std::string& FiniteGroup::descriptor() const { return impl_->descriptor; }

bool FiniteGroup::is_abelian() const { return impl_->abelian; }

Element FiniteGroup::mul(Element a, Element b) const {
  return std::visit(
      overloaded{
          [&](const detail::Cyclic& c) -> Element {
            Element s = a + b;
            return s >= c.n ? s - c.n : s;
          },
          [&](const detail::Dihedral& d) -> Element {
            const Element n = d.n;
            const bool ra = a < n, rb = b < n;
            const Element i = ra ? a : a - n;
            const Element j = rb ? b : b - n;
            if (ra && rb) return (i + j) % n;
            if (ra) return n + (j + n - i) % n;     // r^i s r^j = s r^(j-i)
            if (rb) return n + (i + j) % n;         // s r^i r^j = s r^(i+j)
            return (j + n - i) % n;                 // s r^i s r^j = r^(j-i)
          },
          [&](const detail::Product& p) -> Element {
            const auto m = static_cast<Element>(p.right.order());
            return p.left.mul(a / m, b / m) * m + p.right.mul(a % m, b % m);
          },
          [&](const detail::Table& t) -> Element {
            return t.cells[static_cast<std::size_t>(a) * t.n + b];
          },
      },
      impl_->rep);
}

Element FiniteGroup::inv(Element a) const {
  return std::visit(
      overloaded{
          [&](const detail::Cyclic& c) -> Element { return a == 0 ? 0 : c.n - a; },
          [&](const detail::Dihedral& d) -> Element {
            return a < d.n ? (d.n - a) % d.n : a;
          },
          [&](const detail::Product& p) -> Element {
            const auto m = static_cast<Element>(p.right.order());
            return p.left.inv(a / m) * m + p.right.inv(a % m);
          },
          [&](const detail::Table& t) -> Element { return t.inverse[a]; },
      },
      impl_->rep);
}

Element FiniteGroup::identity() const {
  return std::visit(
      overloaded{
          [](const detail::Table& t) -> Element { return t.identity; },
          [](const detail::Product& p) -> Element {
            return p.left.identity() * static_cast<Element>(p.right.order()) +
                   p.right.identity();
          },
          [](const auto&) -> Element { return 0; },
      },
      impl_->rep);
}

FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_order, "cyclic group needs n >= 1");
  check_order(n);
  return FiniteGroup(std::make_shared<const detail::GroupImpl>(detail::GroupImpl{
      detail::Cyclic{static_cast<Element>(n)}, n, "C" + std::to_string(n), true}));
}

FiniteGroup make_dihedral(std::size_t n) {
  if (n < 3) throw Error(Errc::invalid_order, "dihedral group needs n >= 3");
  check_order(2 * n);
  return FiniteGroup(std::make_shared<const detail::GroupImpl>(
      detail::GroupImpl{detail::Dihedral{static_cast<Element>(n)}, 2 * n,
                        "D" + std::to_string(n), false}));
}

FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order() * h.order();
  if (g.order() > kMaxGroupOrder || h.order() > kMaxGroupOrder ||
      n > kMaxGroupOrder) {
    throw Error(Errc::capacity, "product " + g.descriptor() + " x " +
                                    h.descriptor() +
                                    " exceeds the supported order");
  }
  std::string right = h.descriptor();
  if (std::holds_alternative<detail::Product>(h.impl_->rep)) {
    right = "(" + right + ")";
  }
  return FiniteGroup(std::make_shared<const detail::GroupImpl>(
      detail::GroupImpl{detail::Product{g, h}, n, g.descriptor() + "x" + right,
                        g.is_abelian() && h.is_abelian()}));
}

std::optional<AxiomViolation> check_table(
    const std::vector<std::vector<Element>>& table) {
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      return AxiomViolation{GroupAxiom::closure, static_cast<Element>(i),
                            static_cast<Element>(table[i].size()), 0};
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        return AxiomViolation{GroupAxiom::closure, static_cast<Element>(i),
                              static_cast<Element>(j), 0};
      }
    }
  }
  return scan_axioms(n, [&](Element a, Element b) { return table[a][b]; });
}

std::optional<AxiomViolation> check_axioms(const FiniteGroup& g) {
  return scan_axioms(g.order(),
                     [&](Element a, Element b) { return g.mul(a, b); });
}

FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(Errc::invalid_order, "empty Cayley table");
  check_order(n);
  if (auto bad = check_table(table)) throw Error(Errc::validation, bad->message());

  detail::Table t;
  t.n = static_cast<Element>(n);
  t.cells.reserve(n * n);
  std::uint64_t hash = 0xcbf29ce484222325ULL;  // FNV-1a
  auto mix = [&](std::uint64_t v) {
    for (int k = 0; k < 4; ++k) {
      hash ^= (v >> (8 * k)) & 0xff;
      hash *= 0x100000001b3ULL;
    }
  };
  mix(n);
  for (const auto& row : table) {
    for (Element v : row) {
      t.cells.push_back(v);
      mix(v);
    }
  }
  t.identity = 0;
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = table[e][a] == a;
    if (ok) {
      t.identity = e;
      break;
    }
  }
  t.inverse.assign(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (table[a][b] == t.identity) t.inverse[a] = b;

  const bool abelian =
      scan_commutative(n, [&](Element a, Element b) { return table[a][b]; });
  return FiniteGroup(std::make_shared<const detail::GroupImpl>(detail::GroupImpl{
      std::move(t), n, "table:" + hex64(hash), abelian}));
}

FiniteGroup read_cayley_table(std::istream& in) {
  std::size_t n = 0;
  if (!(in >> n)) throw Error(Errc::parse, "Cayley table: missing order line");
  if (n == 0) throw Error(Errc::invalid_order, "Cayley table of order 0");
  check_order(n);
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long long v = 0;
      if (!(in >> v)) {
        throw Error(Errc::parse, "Cayley table: row " + std::to_string(i) +
                                     " has fewer than " + std::to_string(n) +
                                     " entries");
      }
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(Errc::validation,
                    AxiomViolation{GroupAxiom::closure, static_cast<Element>(i),
                                   static_cast<Element>(j), 0}
                        .message());
      }
      table[i][j] = static_cast<Element>(v);
    }
  }
  std::string extra;
  if (in >> extra) throw Error(Errc::parse, "Cayley table: trailing data");
  return from_cayley_table(table);
}

FiniteGroup read_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open " + path);
  return read_cayley_table(in);
}

void write_cayley_table(std::ostream& out, const FiniteGroup& g) {
  const std::size_t n = g.order();
  out << n << '\n';
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << g.mul(a, b);
    }
    out << '\n';
  }
}

namespace {

FiniteGroup make_factor(std::string_view token) {
  if (token.size() < 2 || (token[0] != 'C' && token[0] != 'D')) {
    throw Error(Errc::parse, "bad group factor '" + std::string(token) + "'");
  }
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), n);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(Errc::parse, "bad group factor '" + std::string(token) + "'");
  }
  return token[0] == 'C' ? make_cyclic(n) : make_dihedral(n);
}

}  // namespace

FiniteGroup make_group(const std::string& descriptor) {
  std::optional<FiniteGroup> result;
  std::size_t start = 0;
  while (true) {
    std::size_t x = descriptor.find('x', start);
    std::string_view token(descriptor.data() + start,
                           (x == std::string::npos ? descriptor.size() : x) - start);
    FiniteGroup factor = make_factor(token);
    result = result ? make_direct_product(*result, factor) : factor;
    if (x == std::string::npos) break;
    start = x + 1;
  }
  return *result;
}

}  // namespace vcgroup
