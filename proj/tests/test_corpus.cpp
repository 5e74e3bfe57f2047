#include "doctest.h"
#include "rlx/corpus.hpp"
#include "rlx/enumerate.hpp"

using namespace rlx;

TEST_CASE("corpus sizes") {
  CHECK(corpus(5).size() == 26);
  CHECK(corpus_up_to(5).size() == 37);
  CHECK(&corpus(5) == &corpus(5));
}

TEST_CASE("sweeps report failures by index and hash") {
  const auto list = corpus_up_to(4);
  const SweepResult r = sweep(list, [](const ResiduatedLattice& a) {
    return a.size() == 3 ? std::vector<std::string>{"size three"} : std::vector<std::string>{};
  });
  CHECK(r.checked == list.size());
  CHECK(r.failed == 2);
  REQUIRE(r.messages.size() == 2);
  CHECK(r.messages[0].rfind("#2 ", 0) == 0);
  CHECK(r.messages[0].find("size three") != std::string::npos);
  CHECK_FALSE(r.ok());
}

TEST_CASE("parallel and serial sweeps agree") {
  const auto list = corpus_up_to(5);
  for (const AlgebraCheck& c : {AlgebraCheck(check_rlp), AlgebraCheck(check_theorems),
                                AlgebraCheck(check_reticulation), AlgebraCheck(check_class_facts)}) {
    const SweepResult p = sweep(list, c), s = sweep_serial(list, c);
    CHECK(p.checked == s.checked);
    CHECK(p.failed == s.failed);
    CHECK(p.messages == s.messages);
  }
  const auto small = corpus_up_to(3);
  CHECK(product_sweep(small).messages == product_sweep_serial(small).messages);
}

TEST_CASE("the property suites pass on algebras up to six elements") {
  const auto list = corpus_up_to(6);
  CHECK(sweep(list, check_rlp).ok());
  CHECK(sweep(list, check_theorems).ok());
  CHECK(sweep(list, check_reticulation).ok());
  CHECK(sweep(list, check_class_facts).ok());
  CHECK(sweep(list, check_gelfand_conormal).ok());
  std::vector<BDLattice> lattices;
  for (std::size_t n = 1; n <= 7; ++n)
    for (auto& l : enumerate_bdl(n)) lattices.push_back(l);
  CHECK(sweep(lattices, check_lattice_radical).ok());
}
