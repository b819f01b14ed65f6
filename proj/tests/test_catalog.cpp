#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "khopos/catalog.hpp"
#include "khopos/config.hpp"

using namespace khopos;

TEST_CASE("every entry parses with its recorded writhe") {
  std::set<std::string> names;
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    CHECK(names.insert(e.name).second);
    const auto d = e.diagram();
    CHECK(d.writhe() == e.writhe);
    CHECK_FALSE(e.presentation().empty());
    CHECK_FALSE(e.note.empty());
  }
  CHECK(names.size() == 21);
}

TEST_CASE("lookups") {
  CHECK(catalog_lookup("T(2,3)").writhe == 3);
  CHECK(catalog_lookup("T(2,3)-").writhe == -3);
  CHECK(catalog_lookup("Hopf-").diagram().component_count() == 2);
  CHECK(catalog_lookup("figure-eight").writhe == 0);
  CHECK(catalog_lookup("T(3,4)").presentation() == "braid 3: 1 2 1 2 1 2 1 2");
  CHECK(catalog_lookup("beta_1").writhe == 15);
  CHECK(catalog_lookup("beta_2").writhe == 23);
  CHECK(catalog_lookup("T(2,3)_{2,1}").writhe == 7);
  CHECK(catalog_lookup("T(2,3)_{2,6}").diagram().is_positive());
  CHECK(catalog_lookup("unknot").diagram() == LinkDiagram::unknot());
  CHECK(catalog_lookup("4-cycle").diagram().crossing_count() == 4);
}

TEST_CASE("missing entries") {
  CHECK_THROWS_WITH_AS(catalog_lookup("K12n110"), doctest::Contains("figure"), PreconditionError);
  CHECK_THROWS_WITH_AS(catalog_lookup("nope"), doctest::Contains("T(2,3)"), PreconditionError);
}

TEST_CASE("job configuration") {
  JobConfig c;
  CHECK_NOTHROW(c.validate());
  c.window = std::pair{2, 1};
  CHECK_THROWS_AS(c.validate(), PreconditionError);
  c.window = std::pair{0, 1};
  c.options.maxStatesPerLevel = 0;
  CHECK_THROWS_AS(c.validate(), PreconditionError);
  c.options.maxStatesPerLevel = 10;
  c.options.workers = 0;
  CHECK_THROWS_AS(c.validate(), PreconditionError);

  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(parse_format("table") == OutputFormat::Table);
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS(parse_format("xml"));

  ::setenv("KHOPOS_WORKERS", "3", 1);
  CHECK(workers_from_env() == 3);
  ::setenv("KHOPOS_WORKERS", "zero", 1);
  CHECK_THROWS(workers_from_env());
  ::unsetenv("KHOPOS_WORKERS");
  CHECK(workers_from_env(2) == 2);
}

TEST_CASE("table serialization") {
  KhTable t(Ring::integers(), Window::range(0, 2));
  t.set(0, 1, {1, {}});
  t.set(2, 7, {0, {mpz_class(2)}});
  CHECK_THROWS(t.set(3, 1, {1, {}}));
  CHECK(KhTable::from_json(t.to_json()) == t);
  CHECK(t.to_csv() == "i,j,rank,torsion\n0,1,1,\n2,7,0,2\n");
  KhTable open(Ring::mod(2), Window{std::nullopt, 1});
  open.set(-4, 3, {2, {}});
  CHECK(KhTable::from_json(open.to_json()) == open);
  CHECK(KhTable::from_json(KhTable(Ring::rationals(), Window::full()).to_json()).window().is_full());
  CHECK(t.shifted(1, 2).known(1, 3) == AbelianGroup{1, {}});
  CHECK(t.restrict(0, 0).groups().size() == 1);
  CHECK_FALSE(t.at(5, 1).has_value());
  CHECK(t.to_grid().find("Z/2") != std::string::npos);
}
