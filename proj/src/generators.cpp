#include "zred/generators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace zred {

namespace {

using Simplex = std::vector<Index>;  // sorted vertex ids

// Appends simplices in filtration order and resolves facets by vertex set.
class ComplexBuilder {
 public:
  Index vertex() { return add({next_vertex_++}); }

  Index add(Simplex s) {
    std::sort(s.begin(), s.end());
    Column facets;
    if (s.size() > 1) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != drop) f.push_back(s[k]);
        facets.push_back(index_.at(f));
      }
      std::sort(facets.begin(), facets.end());
    }
    const auto id = static_cast<Index>(columns_.size());
    if (!index_.emplace(std::move(s), id).second)
      throw std::logic_error("simplex added twice");
    dims_.push_back(static_cast<Dim>(facets.empty() ? 0 : facets.size() - 1));
    columns_.push_back(std::move(facets));
    return id;
  }

  BoundaryMatrix build() && { return BoundaryMatrix(std::move(dims_), std::move(columns_)); }

 private:
  Index next_vertex_ = 0;
  std::map<Simplex, Index> index_;
  std::vector<Dim> dims_;
  std::vector<Column> columns_;
};

struct Built {
  BoundaryMatrix matrix;
  BlockLayout layout;
};

void require_n(std::size_t n, std::size_t min) {
  if (n < min)
    throw std::invalid_argument("n must be at least " + std::to_string(min) + ", got " +
                                std::to_string(n));
}

std::vector<Index> make_vertices(ComplexBuilder& b, std::size_t count) {
  std::vector<Index> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(b.vertex());
  return out;
}

void push_rows(BlockLayout& l, const std::vector<Index>& rows) {
  for (Index r : rows) l.rows.push_back({r});
}

// Wheel vertices: center c and rim w_0..w_n. Spoke s_t = (c, w_t), tire
// t = (w_{t-1}, w_t). Wheel triangle T_t = (c, w_{t-1}, w_t), added T_n first
// so the staircase columns appear with decreasing pivots.
struct Wheel {
  Index c;
  std::vector<Index> w;
};

std::vector<Index> wheel_triangles(ComplexBuilder& b, const Wheel& wh) {
  std::vector<Index> out;
  for (std::size_t t = wh.w.size() - 1; t >= 1; --t) out.push_back(b.add({wh.c, wh.w[t - 1], wh.w[t]}));
  return out;
}

Built build_k1(std::size_t n) {
  require_n(n, 2);
  ComplexBuilder b;
  Wheel wh{b.vertex(), make_vertices(b, n + 1)};
  const auto v = make_vertices(b, n);

  std::vector<Index> spokes(n + 1), tires;
  spokes[0] = b.add({wh.c, wh.w[0]});
  for (std::size_t t = 1; t <= n; ++t) tires.push_back(b.add({wh.w[t - 1], wh.w[t]}));
  for (std::size_t t = 0; t < n; ++t) b.add({wh.c, v[t]});
  for (std::size_t t = 0; t < n; ++t) b.add({wh.w[n], v[t]});
  // Inner spokes after the outer fan edges: a fan column then walks the whole
  // staircase before its outer fan edge becomes the pivot.
  for (std::size_t t = 1; t <= n; ++t) spokes[t] = b.add({wh.c, wh.w[t]});

  BlockLayout l;
  l.cols = wheel_triangles(b, wh);
  for (std::size_t t = 0; t < n; ++t) l.cols.push_back(b.add({wh.c, wh.w[n], v[t]}));
  push_rows(l, spokes);
  return {std::move(b).build(), std::move(l)};
}

Built build_k2(std::size_t n) {
  require_n(n, 2);
  ComplexBuilder b;
  const Index apex = b.vertex();
  Wheel wh{b.vertex(), make_vertices(b, n + 1)};
  const auto v = make_vertices(b, n);

  b.add({apex, wh.c});
  for (Index x : wh.w) b.add({apex, x});
  std::vector<Index> center_fan(n), outer_fan(n), tires, spokes(n + 1);
  for (std::size_t t = n; t-- > 0;) center_fan[t] = b.add({wh.c, v[t]});
  for (std::size_t t = 1; t <= n; ++t) tires.push_back(b.add({wh.w[t - 1], wh.w[t]}));
  spokes[0] = b.add({wh.c, wh.w[0]});
  for (std::size_t t = 1; t < n; ++t) spokes[t] = b.add({wh.c, wh.w[t]});
  for (std::size_t t = 0; t < n; ++t) outer_fan[t] = b.add({wh.w[n], v[t]});
  spokes[n] = b.add({wh.c, wh.w[n]});

  BlockLayout l;
  l.cols = wheel_triangles(b, wh);
  for (std::size_t t = 0; t < n; ++t) l.cols.push_back(b.add({wh.c, wh.w[n], v[t]}));
  // Top block: layout row t pairs tire t with the center fan edge of the
  // mirrored fan triangle; no single edge lies in both triangles.
  for (std::size_t t = 0; t < n; ++t) l.rows.push_back({tires[t], center_fan[n - 1 - t]});
  for (std::size_t t = 0; t < n; ++t) l.rows.push_back({spokes[t]});
  push_rows(l, outer_fan);
  l.rows.push_back({spokes[n]});
  return {std::move(b).build(), std::move(l)};
}

Built build_k3(std::size_t n) {
  require_n(n, 2);
  ComplexBuilder b;
  Wheel wh{b.vertex(), make_vertices(b, n + 1)};
  const Index x = b.vertex();
  const auto y = make_vertices(b, n);
  const Index wn = wh.w[n];

  b.add({wh.c, wh.w[0]});
  b.add({wh.c, x});
  for (std::size_t t = 0; t < n; ++t) b.add({x, y[t]});
  std::vector<Index> tires, outer, spokes;
  for (std::size_t t = 1; t <= n; ++t) tires.push_back(b.add({wh.w[t - 1], wh.w[t]}));
  for (std::size_t t = 0; t < n; ++t) outer.push_back(b.add({wn, y[t]}));
  const Index g = b.add({wn, x});
  for (std::size_t t = 1; t <= n; ++t) spokes.push_back(b.add({wh.c, wh.w[t]}));

  BlockLayout l;
  l.cols = wheel_triangles(b, wh);
  l.cols.push_back(b.add({wh.c, wn, x}));
  for (std::size_t t = 0; t < n; ++t) l.cols.push_back(b.add({wn, x, y[t]}));
  push_rows(l, tires);
  push_rows(l, outer);
  l.rows.push_back({g});
  push_rows(l, spokes);
  return {std::move(b).build(), std::move(l)};
}

Built build_k4(std::size_t n) {
  require_n(n, 2);
  ComplexBuilder b;
  Wheel wh{b.vertex(), make_vertices(b, n + 1)};
  const Index x = b.vertex();
  const Index z = b.vertex();
  const Index u = b.vertex();
  const auto y = make_vertices(b, n);
  const Index wn = wh.w[n];

  b.add({wh.c, wh.w[0]});
  for (std::size_t t = 1; t <= n; ++t) b.add({wh.w[t - 1], wh.w[t]});
  for (std::size_t t = 0; t < n; ++t) b.add({x, y[t]});
  std::vector<Index> top, outer, spokes;
  top.push_back(b.add({wh.c, x}));
  top.push_back(b.add({x, u}));
  top.push_back(b.add({z, u}));
  top.push_back(b.add({wn, z}));
  for (std::size_t t = 0; t < n; ++t) outer.push_back(b.add({wn, y[t]}));
  for (std::size_t t = 1; t <= n; ++t) spokes.push_back(b.add({wh.c, wh.w[t]}));
  const Index shared = b.add({wn, x});
  const Index last = b.add({x, z});

  BlockLayout l;
  l.cols = wheel_triangles(b, wh);
  l.cols.push_back(b.add({wn, x, z}));
  l.cols.push_back(b.add({x, z, u}));
  l.cols.push_back(b.add({wh.c, wn, x}));
  for (std::size_t t = 0; t < n; ++t) l.cols.push_back(b.add({wn, x, y[t]}));
  push_rows(l, top);
  push_rows(l, outer);
  push_rows(l, spokes);
  l.rows.push_back({shared});
  l.rows.push_back({last});
  return {std::move(b).build(), std::move(l)};
}

Built build(Family f, std::size_t n) {
  switch (f) {
    case Family::k1: return build_k1(n);
    case Family::k2: return build_k2(n);
    case Family::k3: return build_k3(n);
    case Family::k4: return build_k4(n);
    case Family::shuffled: break;
  }
  throw std::invalid_argument("no block layout for the shuffled family");
}

constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::k1, "k1"}, {Family::k2, "k2"}, {Family::k3, "k3"},
    {Family::k4, "k4"}, {Family::shuffled, "shuffled"},
};

}  // namespace

std::string_view family_name(Family f) {
  for (auto [id, name] : kFamilyNames)
    if (id == f) return name;
  return "?";
}

Family parse_family(std::string_view name) {
  for (auto [id, n] : kFamilyNames)
    if (n == name) return id;
  std::string msg = "unknown family '" + std::string(name) + "'; valid names:";
  for (auto [id, n] : kFamilyNames) msg += " " + std::string(n);
  throw std::invalid_argument(msg);
}

BoundaryMatrix gen_k1(std::size_t n) { return build_k1(n).matrix; }
BoundaryMatrix gen_k2(std::size_t n) { return build_k2(n).matrix; }
BoundaryMatrix gen_k3(std::size_t n) { return build_k3(n).matrix; }
BoundaryMatrix gen_k4(std::size_t n) { return build_k4(n).matrix; }

BoundaryMatrix gen_shuffled(std::size_t n, std::uint64_t seed) {
  require_n(n, 3);
  std::mt19937_64 rng(seed);
  ComplexBuilder b;
  const auto v = make_vertices(b, n);
  std::vector<Simplex> edges, triangles;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.push_back({v[i], v[j]});
      for (std::size_t k = j + 1; k < n; ++k) triangles.push_back({v[i], v[j], v[k]});
    }
  fisher_yates(edges, rng);
  fisher_yates(triangles, rng);
  for (auto& e : edges) b.add(std::move(e));
  for (auto& t : triangles) b.add(std::move(t));
  return std::move(b).build();
}

BoundaryMatrix generate(const GeneratorSpec& spec) {
  if (spec.family == Family::shuffled) return gen_shuffled(spec.n, spec.seed);
  return build(spec.family, spec.n).matrix;
}

BlockLayout block_layout(Family f, std::size_t n) { return build(f, n).layout; }

}  // namespace zred
