#include "doctest.h"

#include "core/tools.hpp"
#include "support.hpp"

using namespace mace4;

namespace {

const char* kGroupAndAbelian =
    "interpretation(6, [function(*(_,_), [0,1,2,3,4,5, 1,0,3,2,5,4, 2,4,0,5,1,3, "
    "3,5,1,4,0,2, 4,2,5,0,3,1, 5,3,4,1,2,0])]).\n"
    "interpretation(6, [function(*(_,_), [0,1,2,3,4,5, 1,2,3,4,5,0, 2,3,4,5,0,1, "
    "3,4,5,0,1,2, 4,5,0,1,2,3, 5,0,1,2,3,4])]).\n";

const char* kTwoConstants =
    "interpretation(2, [function(c, [0])]).\n"
    "interpretation(2, [function(c, [1])]).\n";

std::string lines_of(const std::string& s, bool keep_summary = false) {
  std::string out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) {
    if (!keep_summary && line.rfind("isofilter:", 0) == 0) continue;
    out += line + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("get-interps") {
  std::string output;
  auto run = testing::run_driver("clauses(t). f(x) != x. end_of_list.",
                                 {"-n3", "-m", "-1", "-P"}, &output);
  CHECK(run.exit_code == 3);
  auto items = extract_interpretations(output);
  CHECK(items.size() == static_cast<std::size_t>(run.models));
  CHECK(read_interpretation_stream(get_interps(output)).size() == items.size());

  std::string none;
  testing::run_driver("clauses(t). a != a. end_of_list.", {"-P"}, &none);
  CHECK(get_interps(none).empty());
}

TEST_CASE("isofilter") {
  auto r = isofilter(read_interpretation_stream(kTwoConstants));
  CHECK(r.input == 2);
  CHECK(r.kept.size() == 1);
  auto single = isofilter(read_interpretation_stream("interpretation(2, [function(c, [1])])."));
  CHECK(single.kept.size() == 1);
  CHECK(isofilter_summary(r).rfind("isofilter: input=2, kept=1,", 0) == 0);

  // Kept items are pairwise nonisomorphic and cover the input.
  auto t = testing::load_theory(testing::fixture("quasigroup_idem.in"));
  auto models = testing::run_engine(t, 4, SearchConfig{0, 0, false}).models;
  REQUIRE(models.size() > 1);
  auto f = isofilter(models);
  for (std::size_t i = 0; i < f.kept.size(); ++i) {
    for (std::size_t j = i + 1; j < f.kept.size(); ++j) CHECK_FALSE(isomorphic(f.kept[i], f.kept[j]));
  }
  for (const auto& m : models) {
    bool covered = false;
    for (const auto& k : f.kept) covered = covered || isomorphic(m, k);
    CHECK(covered);
  }
}

TEST_CASE("modfilter") {
  CHECK(modfilter(kGroupAndAbelian, FilterKind::TrueInAll, "x = x.") == "x = x.\n");
  CHECK(modfilter(kGroupAndAbelian, FilterKind::TrueInAll, "x * y = y * x.").empty());
  CHECK(modfilter(kGroupAndAbelian, FilterKind::TrueInSome, "x * y = y * x.") == "x * y = y * x.\n");
  const std::string first_only(kGroupAndAbelian, std::string(kGroupAndAbelian).find('\n') + 1);
  CHECK(modfilter(first_only, FilterKind::FalseInAll, "x * y = y * x.") == "x * y = y * x.\n");
  CHECK(modfilter("", FilterKind::TrueInSome, "x = x.").empty());

  const char* clauses =
      "x = x.\nx * y = y * x.\nx * x = x.\n(x * y) * z = x * (y * z).\nx * 0 = x.\n"
      "formulas(more). exists x (x * x != x). end_of_list.\n";
  auto admitted = [&](FilterKind k) {
    std::set<std::string> s;
    std::istringstream in(modfilter(kGroupAndAbelian, k, clauses));
    for (std::string line; std::getline(in, line);) s.insert(line);
    return s;
  };
  auto all = admitted(FilterKind::TrueInAll), some_false = admitted(FilterKind::FalseInSome);
  auto some = admitted(FilterKind::TrueInSome), none = admitted(FilterKind::FalseInAll);
  for (const auto& c : all) CHECK(some_false.count(c) == 0);
  CHECK(all.size() + some_false.size() == 6);
  for (const auto& c : some) CHECK(none.count(c) == 0);
  CHECK(some.size() + none.size() == 6);
}

TEST_CASE("modtester") {
  const std::string three = std::string(kGroupAndAbelian) +
                            "interpretation(6, [function(*(_,_), [" + std::string(70, ' ') +
                            "0,0,0,0,0,0, 0,0,0,0,0,0, 0,0,0,0,0,0, 0,0,0,0,0,0, 0,0,0,0,0,0, "
                            "0,0,0,0,0,0])]).\n";
  CHECK(modtester(three, "x = x.\nx * y = y * x.\nx * y != x * y.\n") ==
        "x = x. % [1,2,3]\nx * y = y * x. % [2,3]\nx * y != x * y. % []\n");
}

TEST_CASE("interpfilter") {
  const std::string ol = testing::fixture("ol.in");
  std::string out;
  testing::run_driver(ol, {"-N", "6", "-m", "-1"}, &out);
  const std::string stream = get_interps(out);
  const auto all = read_interpretation_stream(stream);
  REQUIRE(all.size() > 2);

  const char* distributive = "x ^ (y v z) = (x ^ y) v (x ^ z).\n";
  const std::string ops = "op(400, infix, ^). op(400, infix, v).\n";
  auto models = read_interpretation_stream(interpfilter(ops + distributive, true, stream));
  auto nonmodels = read_interpretation_stream(interpfilter(ops + distributive, false, stream));
  CHECK(models.size() + nonmodels.size() == all.size());
  CHECK_FALSE(nonmodels.empty());
  CHECK_FALSE(models.empty());
  // order preserved within each side, and together they partition the input
  std::size_t i = 0, j = 0;
  for (const auto& m : all) {
    if (i < models.size() && models[i] == m) ++i;
    else if (j < nonmodels.size() && nonmodels[j] == m) ++j;
  }
  CHECK(i == models.size());
  CHECK(j == nonmodels.size());

  CHECK(interpfilter("", true, stream) == lines_of(interpfilter("", true, stream)));
  CHECK(read_interpretation_stream(interpfilter("", true, stream)).size() == all.size());
}

TEST_CASE("tool dispatch") {
  std::string out, err;
  CHECK(is_tool_name("get_interps"));
  CHECK_FALSE(is_tool_name("search"));
  CHECK(run_tool("isofilter", {}, kTwoConstants, out, err) == 0);
  CHECK(lines_of(out) == "interpretation(2, [function(c, [0])]).\n");
  CHECK(run_tool("modfilter", {"/nonexistent"}, "", out, err) != 0);
  CHECK(run_tool("oracle-count", {"2"}, "clauses(t). c = c. end_of_list.", out, err) == 0);
  CHECK(out == "2\n");
}
