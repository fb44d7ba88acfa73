#include "doctest.h"

#include "core/oracle.hpp"
#include "support.hpp"

using namespace mace4;

TEST_CASE("oracle counts") {
  auto count = [](const std::string& clauses, int n) {
    auto t = testing::load_theory("clauses(t).\n" + clauses + "\nend_of_list.\n");
    return enumerate_models(t.signature, n, t.clauses).count;
  };
  CHECK(count("c = c.", 2) == 2);
  CHECK(count("f(x) = x.", 3) == 1);
  CHECK(count("x * y = y * x.", 2) == 8);
  CHECK(count("f(f(x)) = x.", 3) == 4);  // identity and three transpositions
  CHECK(count("a = 0.\na = 1.", 2) == 0);
  CHECK(count("P(x) | Q(x).", 2) == 9);

  Signature big{{"f", 2, false}, {"g", 2, false}};
  CHECK(enumerate_models(big, 4, {}, false).refused);
  CHECK(interpretation_space(big, 2) == doctest::Approx(256.0));
}

TEST_CASE("explicit ground encoding") {
  auto t = testing::load_theory("clauses(t). f(x,f(x,y)) = y. end_of_list.");
  auto enc = emit_ground_encoding(t.clauses, t.signature, 4);
  CHECK(enc.instances == 16);
  CHECK(enc.distinctness == 6);
  CHECK(enc.cell_clauses == 16);
  CHECK(enc.clauses.size() == 16 + 6 + 16);
  for (std::size_t i = enc.clauses.size() - 16; i < enc.clauses.size(); ++i) {
    CHECK(enc.clauses[i].literals.size() == 4);
  }
  CHECK(enc.text.find("0 != 3.") != std::string::npos);

  for (const char* text : {"f(x,f(x,y)) = y.", "f(x,y) != x.", "f(x,x) = 0.\nf(0,0) = 1."}) {
    auto th = testing::load_theory(std::string("clauses(t).\n") + text + "\nend_of_list.\n");
    for (int n = 2; n <= 3; ++n) {
      auto e = emit_ground_encoding(th.clauses, th.signature, n);
      auto sat = ground_encoding_satisfiable(e, th.signature, n);
      REQUIRE(sat.has_value());
      CHECK(*sat == (enumerate_models(th.signature, n, th.clauses).count > 0));
    }
  }
}
