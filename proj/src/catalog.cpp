#include "khopos/catalog.hpp"

#include "khopos/cables.hpp"

namespace khopos {

LinkDiagram CatalogEntry::diagram() const { return braid ? parse_braid(*braid) : parse_pd(pd); }

std::string CatalogEntry::presentation() const { return braid ? to_braid_text(*braid) : pd; }

namespace {

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> c;
  auto braid = [&](std::string name, BraidWord b, std::string note) {
    const int w = b.exponent_sum();
    c.push_back({std::move(name), std::move(b), "", w, std::move(note)});
  };
  auto pd = [&](std::string name, std::string text, std::string note) {
    const int w = parse_pd(text).writhe();
    c.push_back({std::move(name), std::nullopt, std::move(text), w, std::move(note)});
  };
  pd("unknot", "components: 1", "zero-crossing unknot");
  braid("Hopf+", {2, {1, 1}}, "positive Hopf link");
  braid("Hopf-", {2, {-1, -1}}, "negative Hopf link");
  braid("T(2,3)", {2, {1, 1, 1}}, "positive trefoil");
  braid("T(2,3)-", {2, {-1, -1, -1}}, "negative trefoil");
  braid("figure-eight", {3, {1, -2, 1, -2}}, "amphichiral, neither positive nor negative");
  braid("T(2,5)", torus_braid(2, 5), "torus knot");
  braid("T(2,7)", torus_braid(2, 7), "torus knot");
  braid("T(3,4)", torus_braid(3, 4), "torus knot");
  braid("T(3,5)", torus_braid(3, 5), "torus knot");
  for (int n = 1; n <= 4; ++n) braid("beta_" + std::to_string(n), beta_n(n), "4-braid with one negative letter, positive knot");
  for (int q = 1; q <= 6; ++q)
    braid("T(2,3)_{2," + std::to_string(q) + "}", cable_braid({2, {1, 1, 1}}, {2, q, 0}), "(2," + std::to_string(q) + ")-cable of the trefoil");
  pd("4-cycle", "X(4,6,1,5) X(8,2,5,1) X(2,8,3,7) X(6,4,7,3)",
     "positive 4-crossing two-component diagram whose Seifert graph is a 4-cycle");
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_lookup(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  std::string known;
  for (const auto& e : catalog()) known += (known.empty() ? "" : ", ") + e.name;
  if (name == "K12n110")
    throw PreconditionError("K12n110 is not in the catalog: its diagram is only available as a figure. Known: " + known);
  throw PreconditionError("unknown catalog entry '" + name + "'. Known: " + known);
}

}  // namespace khopos
