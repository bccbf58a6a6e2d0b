#include "vcgroup/cayley.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "vcgroup/error.hpp"

namespace vcgroup {

Digraph::Digraph(std::size_t vertex_count)
    : out_(vertex_count, Subset(vertex_count)) {}

void Digraph::add_edge(Element from, Element to) {
  if (from >= vertex_count() || to >= vertex_count()) {
    throw Error(Errc::dimension, "edge " + std::to_string(from) + "->" +
                                     std::to_string(to) + " outside a graph on " +
                                     std::to_string(vertex_count()) + " vertices");
  }
  out_[from].insert(to);
}

bool Digraph::has_edge(Element from, Element to) const {
  return out_.at(from).contains(to);
}

std::size_t Digraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& s : out_) total += s.count();
  return total;
}

bool Digraph::is_symmetric() const {
  for (Element u = 0; u < vertex_count(); ++u) {
    bool ok = true;
    out_[u].for_each([&](Element v) { ok = ok && out_[v].contains(u); });
    if (!ok) return false;
  }
  return true;
}

namespace {

void require_sized(const FiniteGroup& g, const Subset& a) {
  if (a.universe() != g.order()) {
    throw Error(Errc::dimension, "subset sized " + std::to_string(a.universe()) +
                                     " for group " + g.descriptor());
  }
}

}  // namespace

Digraph cayley_digraph(const FiniteGroup& g, const Subset& a) {
  require_sized(g, a);
  Digraph d(g.order());
  const std::vector<Element> gens = a.elements();
  for (Element u = 0; u < g.order(); ++u) {
    for (Element x : gens) d.add_edge(u, g.mul(u, x));
  }
  return d;
}

Digraph cayley_sum_graph(const FiniteGroup& g, const Subset& a) {
  require_sized(g, a);
  if (!g.is_abelian()) {
    throw Error(Errc::precondition,
                "Cayley sum graphs need an abelian group, got " + g.descriptor());
  }
  Digraph d(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      if (a.contains(g.mul(x, y))) d.add_edge(x, y);
    }
  }
  return d;
}

TranslateFamily neighborhood_family(const Digraph& d) {
  std::vector<Subset> members;
  members.reserve(d.vertex_count());
  for (Element v = 0; v < d.vertex_count(); ++v) {
    members.push_back(d.out_neighbors(v));
  }
  return TranslateFamily::from_members(d.vertex_count(), std::move(members),
                                       FamilyKind::digraph_neighborhoods);
}

TranslateFamily closed_neighborhood_family(const Digraph& d) {
  std::vector<Subset> members;
  members.reserve(d.vertex_count());
  for (Element v = 0; v < d.vertex_count(); ++v) {
    Subset s = d.out_neighbors(v);
    s.insert(v);
    members.push_back(std::move(s));
  }
  return TranslateFamily::from_members(d.vertex_count(), std::move(members),
                                       FamilyKind::digraph_neighborhoods);
}

void write_adjacency(std::ostream& out, const Digraph& d) {
  for (Element v = 0; v < d.vertex_count(); ++v) {
    out << v << ':';
    d.out_neighbors(v).for_each([&](Element w) { out << ' ' << w; });
    out << '\n';
  }
}

Digraph read_adjacency(std::istream& in) {
  std::vector<std::vector<Element>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(':');
    std::size_t label = 0;
    const bool labelled =
        colon != std::string::npos &&
        std::from_chars(line.data(), line.data() + colon, label).ptr == line.data() + colon;
    if (!labelled || label != rows.size()) {
      throw Error(Errc::parse, "adjacency line " + std::to_string(rows.size()) +
                                   " is not of the form \"v: w1 w2 ...\"");
    }
    std::istringstream rest(line.substr(colon + 1));
    std::vector<Element> row;
    for (unsigned long w; rest >> w;) row.push_back(static_cast<Element>(w));
    if (!rest.eof()) {
      throw Error(Errc::parse, "bad neighbour list on adjacency line " +
                                   std::to_string(rows.size()));
    }
    rows.push_back(std::move(row));
  }
  Digraph d(rows.size());
  for (Element v = 0; v < rows.size(); ++v) {
    for (Element w : rows[v]) d.add_edge(v, w);
  }
  return d;
}

}  // namespace vcgroup
