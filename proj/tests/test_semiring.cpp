#include <doctest.h>

#include "involute/error.hpp"
#include "involute/semiring.hpp"

using namespace involute;

TEST_CASE("gf9 law check is exhaustive and green") {
  Report rep = law_check_involutive_semiring(Semiring::gf9(), 1, 0);
  CHECK(rep.all_pass());
  // ternary laws run over all 9^3 triples
  for (const auto& r : rep.results())
    if (r.law == "add-assoc" || r.law == "mul-assoc" ||
        r.law == "distrib-left" || r.law == "distrib-right")
      CHECK(r.checked == 729);
}

TEST_CASE("boolean law check is exhaustive and green") {
  Report rep = law_check_involutive_semiring(Semiring::boolean(), 1, 0);
  CHECK(rep.all_pass());
}

TEST_CASE("sampled gauss and rational law checks are green") {
  CHECK(law_check_involutive_semiring(Semiring::gauss(), 1000, 1).all_pass());
  CHECK(law_check_involutive_semiring(Semiring::rational(), 1000, 1).all_pass());
}

TEST_CASE("broken instance with conj(1)=0 fails with witness s=1") {
  SemiringModel m = SemiringModel::of(Semiring::gf9());
  m.name = "gf9-broken-conj";
  m.conj = [](const Scalar& s) {
    if (is_one(s)) return Scalar(Gf9{0, 0});
    return conj(s);
  };
  Report rep = law_check_involutive_semiring(m, 1, 0);
  CHECK_FALSE(rep.all_pass());
  bool conj_one_failed = false;
  for (const auto& r : rep.results())
    if (r.law == "conj-one") {
      conj_one_failed = !r.pass;
      CHECK(r.witness == "s=1+0i");
    }
  CHECK(conj_one_failed);
}

TEST_CASE("semiring lookup by name") {
  CHECK(Semiring::by_name("gauss") == Semiring::gauss());
  CHECK(Semiring::by_name("bool") == Semiring::boolean());
  CHECK_THROWS_AS(Semiring::by_name("nosuch"), input_error);
}

TEST_CASE("scalar JSON codecs round-trip and validate") {
  const Semiring& g = Semiring::gauss();
  Scalar s = g.scalar_from_json({{"re", "1/2"}, {"im", "-3"}});
  CHECK(scalar_to_json(s) == nlohmann::json{{"re", "1/2"}, {"im", "-3"}});
  CHECK_THROWS_AS(g.scalar_from_json("1/2"), input_error);

  const Semiring& f = Semiring::gf9();
  CHECK(f.scalar_from_json({{"re", 1}, {"im", 2}}) == Scalar(Gf9{1, 2}));
  CHECK_THROWS_AS(f.scalar_from_json({{"re", 3}, {"im", 0}}), input_error);

  CHECK(Semiring::rational().scalar_from_json("5/6") ==
        Scalar(Rational(BigInt(5), BigInt(6))));
  CHECK_THROWS_AS(Semiring::rational().scalar_from_json("4/6"), input_error);
  CHECK(Semiring::boolean().scalar_from_json(true) == Scalar(true));
}

TEST_CASE("law check requires a positive budget") {
  CHECK_THROWS_AS(law_check_involutive_semiring(Semiring::gauss(), 0, 0),
                  input_error);
}
