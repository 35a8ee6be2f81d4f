#include "involute/semiring.hpp"

#include "involute/error.hpp"

namespace involute {

const Semiring& Semiring::boolean() {
  static const Semiring s(
      ScalarKind::boolean, "bool", Scalar(false), Scalar(true),
      std::make_shared<const std::vector<Scalar>>(
          std::vector<Scalar>{Scalar(false), Scalar(true)}));
  return s;
}

const Semiring& Semiring::rational() {
  static const Semiring s(ScalarKind::rational, "rat", Scalar(Rational(0)),
                          Scalar(Rational(1)), nullptr);
  return s;
}

const Semiring& Semiring::gauss() {
  static const Semiring s(ScalarKind::gauss, "gauss",
                          Scalar(GaussianRational{Rational(0), Rational(0)}),
                          Scalar(GaussianRational{Rational(1), Rational(0)}),
                          nullptr);
  return s;
}

const Semiring& Semiring::gf9() {
  static const Semiring s = [] {
    std::vector<Scalar> es;
    es.reserve(9);
    for (int i = 0; i < 9; ++i) es.push_back(Scalar(gf9_of_index(i)));
    return Semiring(ScalarKind::gf9, "gf9", Scalar(Gf9{0, 0}),
                    Scalar(Gf9{1, 0}),
                    std::make_shared<const std::vector<Scalar>>(std::move(es)));
  }();
  return s;
}

const Semiring& Semiring::by_name(std::string_view name) {
  for (const Semiring& s : all())
    if (s.name() == name) return s;
  throw input_error("unknown scalar semiring: '" + std::string(name) + "'");
}

const std::vector<Semiring>& Semiring::all() {
  static const std::vector<Semiring> v{boolean(), rational(), gauss(), gf9()};
  return v;
}

const std::vector<Scalar>& Semiring::elements() const {
  if (!elements_)
    throw input_error("semiring '" + name_ + "' is not enumerable");
  return *elements_;
}

Scalar Semiring::sample(Rng& rng) const {
  switch (kind_) {
    case ScalarKind::boolean: return Scalar(rng.coin());
    case ScalarKind::gf9:
      return Scalar(gf9_of_index(static_cast<int>(rng.below(9))));
    case ScalarKind::rational:
      return Scalar(Rational(BigInt(rng.int_in(-12, 12)),
                             BigInt(rng.int_in(1, 12))));
    case ScalarKind::gauss: {
      Rational re(BigInt(rng.int_in(-12, 12)), BigInt(rng.int_in(1, 12)));
      Rational im(BigInt(rng.int_in(-12, 12)), BigInt(rng.int_in(1, 12)));
      return Scalar(GaussianRational{std::move(re), std::move(im)});
    }
  }
  throw input_error("unreachable scalar kind");
}

Scalar Semiring::scalar_from_json(const nlohmann::json& j) const {
  switch (kind_) {
    case ScalarKind::boolean:
      if (!j.is_boolean()) throw input_error("expected JSON boolean scalar");
      return Scalar(j.get<bool>());
    case ScalarKind::rational:
      if (!j.is_string()) throw input_error("expected rational string scalar");
      return Scalar(Rational::parse(j.get<std::string>()));
    case ScalarKind::gauss: {
      if (!j.is_object() || !j.contains("re") || !j.contains("im") ||
          j.size() != 2 || !j["re"].is_string() || !j["im"].is_string())
        throw input_error("expected {\"re\":\"p/q\",\"im\":\"p/q\"} scalar");
      return Scalar(
          GaussianRational{Rational::parse(j["re"].get<std::string>()),
                           Rational::parse(j["im"].get<std::string>())});
    }
    case ScalarKind::gf9: {
      if (!j.is_object() || !j.contains("re") || !j.contains("im") ||
          j.size() != 2 || !j["re"].is_number_integer() ||
          !j["im"].is_number_integer())
        throw input_error("expected {\"re\":0..2,\"im\":0..2} scalar");
      int re = j["re"].get<int>();
      int im = j["im"].get<int>();
      if (re < 0 || re > 2 || im < 0 || im > 2)
        throw input_error("gf9 component out of range");
      return Scalar(Gf9{static_cast<std::uint8_t>(re),
                        static_cast<std::uint8_t>(im)});
    }
  }
  throw input_error("unreachable scalar kind");
}

nlohmann::json scalar_to_json(const Scalar& s) {
  switch (s.kind()) {
    case ScalarKind::boolean: return s.as_bool();
    case ScalarKind::rational: return s.as_rational().str();
    case ScalarKind::gauss:
      return {{"re", s.as_gauss().re.str()}, {"im", s.as_gauss().im.str()}};
    case ScalarKind::gf9:
      return {{"re", static_cast<int>(s.as_gf9().re)},
              {"im", static_cast<int>(s.as_gf9().im)}};
  }
  throw input_error("unreachable scalar kind");
}

SemiringModel SemiringModel::of(const Semiring& s) {
  SemiringModel m;
  m.name = s.name();
  m.zero = s.zero();
  m.one = s.one();
  m.add = [](const Scalar& a, const Scalar& b) { return involute::add(a, b); };
  m.mul = [](const Scalar& a, const Scalar& b) { return involute::mul(a, b); };
  m.conj = [](const Scalar& a) { return involute::conj(a); };
  if (s.enumerable()) m.elements = s.elements();
  m.sample = [s](Rng& rng) { return s.sample(rng); };
  return m;
}

namespace {

using Tuple = std::vector<Scalar>;

// Runs `law` over every tuple of the given arity: all element tuples when
// the model is enumerable, else `budget` sampled ones. Returns the result
// with `checked` filled in and the first counterexample as witness.
LawResult run_law(const SemiringModel& m, const std::string& law_name,
                  int arity, int budget, std::uint64_t seed,
                  const std::function<bool(const Tuple&)>& law,
                  const std::function<std::string(const Tuple&)>& describe) {
  LawResult r;
  r.suite = "semiring";
  r.law = law_name;
  r.instance = m.name;
  auto consider = [&](const Tuple& t) {
    ++r.checked;
    if (r.pass && !law(t)) {
      r.pass = false;
      r.witness = describe(t);
    }
  };
  if (!m.elements.empty()) {
    const auto& es = m.elements;
    Tuple t(static_cast<size_t>(arity), m.zero);
    std::vector<size_t> idx(static_cast<size_t>(arity), 0);
    while (true) {
      for (int k = 0; k < arity; ++k) t[static_cast<size_t>(k)] = es[idx[static_cast<size_t>(k)]];
      consider(t);
      int k = arity - 1;
      while (k >= 0 && ++idx[static_cast<size_t>(k)] == es.size()) {
        idx[static_cast<size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
    }
  } else {
    Rng rng(seed ^ std::hash<std::string>{}(law_name));
    for (int i = 0; i < budget; ++i) {
      Tuple t;
      t.reserve(static_cast<size_t>(arity));
      for (int k = 0; k < arity; ++k) t.push_back(m.sample(rng));
      consider(t);
    }
  }
  return r;
}

std::string show1(const Tuple& t) { return "s=" + to_string(t[0]); }
std::string show2(const Tuple& t) {
  return "s=" + to_string(t[0]) + ", t=" + to_string(t[1]);
}
std::string show3(const Tuple& t) {
  return "s=" + to_string(t[0]) + ", t=" + to_string(t[1]) +
         ", u=" + to_string(t[2]);
}

}  // namespace

Report law_check_involutive_semiring(const SemiringModel& m, int sample_budget,
                                     std::uint64_t seed) {
  if (sample_budget < 1) throw input_error("sample_budget must be >= 1");
  Report rep;
  auto law3 = [&](const std::string& name,
                  const std::function<bool(const Tuple&)>& f) {
    rep.add(run_law(m, name, 3, sample_budget, seed, f, show3));
  };
  auto law2 = [&](const std::string& name,
                  const std::function<bool(const Tuple&)>& f) {
    rep.add(run_law(m, name, 2, sample_budget, seed, f, show2));
  };
  auto law1 = [&](const std::string& name,
                  const std::function<bool(const Tuple&)>& f) {
    rep.add(run_law(m, name, 1, sample_budget, seed, f, show1));
  };
  auto law0 = [&](const std::string& name, bool ok, const std::string& wit) {
    LawResult r;
    r.suite = "semiring";
    r.law = name;
    r.instance = m.name;
    r.checked = 1;
    if (!ok) {
      r.pass = false;
      r.witness = wit;
    }
    rep.add(r);
  };

  law3("add-assoc", [&](const Tuple& t) {
    return m.add(m.add(t[0], t[1]), t[2]) == m.add(t[0], m.add(t[1], t[2]));
  });
  law2("add-comm", [&](const Tuple& t) {
    return m.add(t[0], t[1]) == m.add(t[1], t[0]);
  });
  law1("add-unit",
       [&](const Tuple& t) { return m.add(t[0], m.zero) == t[0]; });
  law3("mul-assoc", [&](const Tuple& t) {
    return m.mul(m.mul(t[0], t[1]), t[2]) == m.mul(t[0], m.mul(t[1], t[2]));
  });
  law2("mul-comm", [&](const Tuple& t) {
    return m.mul(t[0], t[1]) == m.mul(t[1], t[0]);
  });
  law1("mul-unit",
       [&](const Tuple& t) { return m.mul(t[0], m.one) == t[0]; });
  law3("distrib-left", [&](const Tuple& t) {
    return m.mul(t[0], m.add(t[1], t[2])) ==
           m.add(m.mul(t[0], t[1]), m.mul(t[0], t[2]));
  });
  law3("distrib-right", [&](const Tuple& t) {
    return m.mul(m.add(t[0], t[1]), t[2]) ==
           m.add(m.mul(t[0], t[2]), m.mul(t[1], t[2]));
  });
  law1("annihilation",
       [&](const Tuple& t) { return m.mul(t[0], m.zero) == m.zero; });
  law1("conj-involution",
       [&](const Tuple& t) { return m.conj(m.conj(t[0])) == t[0]; });
  law2("conj-add", [&](const Tuple& t) {
    return m.conj(m.add(t[0], t[1])) == m.add(m.conj(t[0]), m.conj(t[1]));
  });
  law2("conj-mul", [&](const Tuple& t) {
    return m.conj(m.mul(t[0], t[1])) == m.mul(m.conj(t[0]), m.conj(t[1]));
  });
  law0("conj-zero", m.conj(m.zero) == m.zero, "s=" + to_string(m.zero));
  law0("conj-one", m.conj(m.one) == m.one, "s=" + to_string(m.one));
  return rep;
}

Report law_check_involutive_semiring(const Semiring& s, int sample_budget,
                                     std::uint64_t seed) {
  return law_check_involutive_semiring(SemiringModel::of(s), sample_budget,
                                       seed);
}

}  // namespace involute
