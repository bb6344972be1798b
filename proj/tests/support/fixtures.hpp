#pragma once

// The six bundled example spaces, built programmatically. The data files in
// fixtures/ must parse to exactly these.

#include "primaltop/primal.hpp"

namespace fixtures {

using namespace primaltop;

inline UniversePtr abc() { return Universe::make({"a", "b", "c"}); }

inline PrimalSpace make(UniversePtr u,
                        std::initializer_list<std::initializer_list<std::string_view>> opens,
                        std::initializer_list<std::initializer_list<std::string_view>> primal) {
  return PrimalSpace::create(Topology::validate(SetFamily::of(u, opens)),
                             Primal::validate(SetFamily::of(u, primal)));
}

// tau = {{}, {b}, {c}, {b,c}, {a,c}, X}, primal = {{}, {b}, {c}, {b,c}}
inline PrimalSpace ex_a() {
  auto u = abc();
  return make(u, {{}, {"b"}, {"c"}, {"b", "c"}, {"a", "c"}, {"a", "b", "c"}},
              {{}, {"b"}, {"c"}, {"b", "c"}});
}

// indiscrete tau, same primal as EX-A
inline PrimalSpace ex_b() {
  auto u = abc();
  return make(u, {{}, {"a", "b", "c"}}, {{}, {"b"}, {"c"}, {"b", "c"}});
}

// tau = {{}, {a}, {c}, {a,c}, X}, primal = {{}, {a}, {b}, {c}, {a,b}, {a,c}}
inline PrimalSpace ex_c() {
  auto u = abc();
  return make(u, {{}, {"a"}, {"c"}, {"a", "c"}, {"a", "b", "c"}},
              {{}, {"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}});
}

// tau = {{}, X, {a,b}, {b,c}, {b}}, primal = {{}, {a}, {b}, {a,b}}
inline PrimalSpace ex_d() {
  auto u = abc();
  return make(u, {{}, {"a", "b", "c"}, {"a", "b"}, {"b", "c"}, {"b"}},
              {{}, {"a"}, {"b"}, {"a", "b"}});
}

// tau = {{}, X, {a}, {b}, {a,b}}, primal = {{}, {a}, {b}, {a,b}}
inline PrimalSpace ex_e() {
  auto u = abc();
  return make(u, {{}, {"a", "b", "c"}, {"a"}, {"b"}, {"a", "b"}},
              {{}, {"a"}, {"b"}, {"a", "b"}});
}

// tau = {{}, X, {a}, {b}, {a,b}}, primal = 2^X minus {X, {a,b}}
inline PrimalSpace ex_f() {
  auto u = abc();
  return make(u, {{}, {"a", "b", "c"}, {"a"}, {"b"}, {"a", "b"}},
              {{}, {"a"}, {"b"}, {"c"}, {"a", "c"}, {"b", "c"}});
}

}  // namespace fixtures
