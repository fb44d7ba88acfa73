#include "doctest.h"

#include "core/errors.hpp"
#include "support.hpp"

using namespace mace4;

namespace {

Options effective(const std::string& text, std::vector<std::string> args) {
  Options o;
  apply_commands(parse_input(text), o);
  parse_command_line(args).apply_to(o);
  return o;
}

}  // namespace

TEST_CASE("option defaults") {
  Options o;
  CHECK(o.flag("print_models"));
  CHECK_FALSE(o.flag("print_models_portable"));
  CHECK_FALSE(o.flag("prolog_style_variables"));
  CHECK_FALSE(o.flag("verbose"));
  CHECK(o.flag("lnh"));
  CHECK(o.flag("negprop"));
  CHECK(o.flag("neg_assign"));
  CHECK(o.flag("neg_assign_near"));
  CHECK(o.flag("neg_elim"));
  CHECK(o.flag("neg_elim_near"));
  CHECK_FALSE(o.flag("trace"));
  CHECK(o.param("domain_size") == 2);
  CHECK(o.param("iterate_up_to") == 0);
  CHECK(o.param("max_models") == 1);
  CHECK(o.param("max_seconds") == -1);
  CHECK(o.param("max_megs") == 192);
  CHECK(o.param("selection_order") == 2);
  CHECK(o.param("selection_measure") == 4);
  CHECK_THROWS_AS(o.assign("selection_order", 3), UsageError);
  CHECK_THROWS_AS(o.assign("max_models", -2), UsageError);
  CHECK_THROWS_AS(o.set_flag("no_such_flag", true), UsageError);
}

TEST_CASE("command line overrides the input file") {
  Options o = effective("assign(iterate_up_to, 10).", {"-n8", "-m", "20"});
  CHECK(o.param("domain_size") == 8);
  CHECK(o.param("iterate_up_to") == 10);
  CHECK(o.param("max_models") == 20);

  Options f = effective("set(print_models_portable). clear(lnh).", {"-P0", "-L1", "-v"});
  CHECK_FALSE(f.flag("print_models_portable"));
  CHECK(f.flag("lnh"));
  CHECK(f.flag("verbose"));

  CHECK_THROWS_AS(parse_command_line(std::vector<std::string>{"-q"}), UsageError);
  CHECK_THROWS_AS(parse_command_line(std::vector<std::string>{"-n"}), UsageError);
  CHECK(parse_command_line(std::vector<std::string>{"-c"}).compatibility);

  std::string out;
  auto r = testing::run_driver(testing::fixture("quasigroup_idem.in"),
                               {"-N", "10", "-n8", "-m20", "-p0"}, &out);
  CHECK(r.exit_code == 0);
  CHECK(r.models == 20);
  CHECK(out.find("% DOMAIN SIZE 7") == std::string::npos);
  CHECK(out.find("% DOMAIN SIZE 8") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(testing::run_driver("clauses(t). a != a. end_of_list.", {}).exit_code == 2);
  CHECK(testing::run_driver("clauses(t). f(x) != x. end_of_list.", {"-m", "-1"}).exit_code == 3);
  CHECK(testing::run_driver("clauses(t). f(x) != x. end_of_list.", {}).exit_code == 0);
  CHECK(testing::run_driver(testing::fixture("group.in"), {"-t0"}).exit_code == 5);
  CHECK(testing::run_driver("clauses(t). f(x) = 9. end_of_list.", {}).exit_code == 1);
  CHECK(testing::run_driver("set(bogus).", {}).exit_code == 1);
  CHECK(testing::run_driver("set(bogus). clauses(t). a = a. end_of_list.", {"-c"}).exit_code == 0);
  auto mem = testing::run_driver(testing::fixture("group.in"), {"-b0"});
  CHECK(mem.exit_code == 1);
  CHECK_FALSE(mem.error.empty());
}

TEST_CASE("output echoes a parseable input") {
  std::string out;
  testing::run_driver(testing::fixture("ol.in"), {"-N", "4", "-m", "-1"}, &out);
  // everything before the first search note is the echo
  auto program = parse_input(out.substr(0, out.find("% DOMAIN SIZE")));
  REQUIRE(program.lists.size() == 1);
  CHECK(program.lists[0].terms.size() == 11);
  CHECK(program.ops.binary("^") == OpEntry{400, OpType::Infix});
}

TEST_CASE("formulas in the input are clausified") {
  std::string out;
  auto r = testing::run_driver(testing::fixture("commutative_inverse.in"), {"-N", "4", "-v"}, &out);
  CHECK(r.exit_code == 0);
  CHECK(out.find("sk1") != std::string::npos);
}
