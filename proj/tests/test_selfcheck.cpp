#include <doctest.h>

#include <map>

#include "eqclass/selfcheck.hpp"

using namespace eqclass;

namespace {

std::map<std::string, Verdict> by_name(const std::vector<PropertyResult>& rs) {
  std::map<std::string, Verdict> out;
  for (const auto& r : rs) out[r.module + "/" + r.name] = r.status;
  return out;
}

}  // namespace

TEST_SUITE("selfcheck") {

TEST_CASE("fresh run: only the hypergraph converse fails") {
  const auto rs = run_selfcheck();
  CHECK(rs.size() == 25);
  for (const auto& r : rs) {
    INFO(r.module, "/", r.name, ": ", r.detail);
    if (r.name == "lemma4-minor-implies-hom") {
      CHECK(r.status == Verdict::Fails);
      CHECK(r.detail.find("hg:2:{1}") != std::string::npos);
    } else {
      CHECK(r.status == Verdict::Holds);
    }
  }
  CHECK(selfcheck_exit_code(rs) == 1);
}

TEST_CASE("a corrupted inclusion table is caught") {
  SelfcheckOptions o;
  auto t = default_inclusion_table(4);
  t.covers.emplace_back(parse_class_id("M"), parse_class_id("L"));
  o.table = t;
  const auto m = by_name(run_selfcheck(o));
  CHECK(m.at("classes/inclusion-table") == Verdict::Fails);
  CHECK(m.at("core/bit-convention") == Verdict::Holds);
}

TEST_CASE("exit codes") {
  std::vector<PropertyResult> rs(2);
  CHECK(selfcheck_exit_code(rs) == 0);
  rs[0].status = Verdict::Fails;
  CHECK(selfcheck_exit_code(rs) == 1);
  rs[1].status = Verdict::Inconclusive;
  CHECK(selfcheck_exit_code(rs) == 2);
}

}  // TEST_SUITE
