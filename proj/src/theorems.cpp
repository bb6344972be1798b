#include "primaltop/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace primaltop {

namespace {

// ---------------------------------------------------------------------------
// Per-space evaluation context: operator tables and induced families are
// materialized once and shared by every theorem evaluated on the space.
// ---------------------------------------------------------------------------

struct Ctx {
  const PrimalSpace& s;
  const Topology& t;
  const Primal& p;
  int n;
  Bits full;
  std::vector<Bits> dia;   // A^diamond per subset pattern
  std::vector<Bits> diaR;  // A^diamond_R per subset pattern
  SetFamily tau_r;         // induced by cl-diamond-r
  SetFamily tau_d;         // induced by cl-diamond

  explicit Ctx(const PrimalSpace& space)
      : s(space),
        t(space.topology()),
        p(space.primal()),
        n(space.universe().size()),
        full(space.universe().full_mask()),
        tau_r(space.universe_ptr(), {}),
        tau_d(space.universe_ptr(), {}) {
    dia.reserve(static_cast<size_t>(full) + 1);
    diaR.reserve(static_cast<size_t>(full) + 1);
    for (Bits m = 0;; ++m) {
      dia.push_back(diamond_bits(s, m));
      diaR.push_back(diamond_r_bits(s, m));
      if (m == full) break;
    }
    tau_r = induced(diaR);
    tau_d = induced(dia);
  }

  SetFamily induced(const std::vector<Bits>& table) const {
    std::vector<Bits> members;
    for (Bits m = 0;; ++m) {
      const Bits c = m ^ full;
      if ((table[c] & ~c) == 0) members.push_back(m);
      if (m == full) break;
    }
    SetFamily family(s.universe_ptr(), std::move(members));
    require_topology_axioms(family);
    return family;
  }

  Bits cl(Bits a) const { return a | dia[a]; }
  Bits clR(Bits a) const { return a | diaR[a]; }
  const SetFamily& tau() const { return t.opens(); }
  const SetFamily& tau_delta() const { return t.delta_open_family(); }
  bool delta_closed(Bits a) const { return tau_delta().contains_bits(a ^ full); }
  std::string set_text(Bits a) const { return bits_to_string(s.universe(), a); }
};

class Sink {
 public:
  Sink(const Ctx& ctx, std::vector<SpaceWitness>* out, size_t cap)
      : ctx_(ctx), out_(out), cap_(cap) {}

  bool full() const noexcept { return out_->size() >= cap_; }

  void add(std::vector<Bits> subsets, std::string note) {
    if (full()) return;
    std::vector<Subset> sets;
    sets.reserve(subsets.size());
    for (Bits b : subsets) sets.emplace_back(ctx_.s.universe_ptr(), b);
    out_->push_back(SpaceWitness{ctx_.t.opens(), ctx_.p.members(), std::move(sets), std::move(note)});
  }

 private:
  const Ctx& ctx_;
  std::vector<SpaceWitness>* out_;
  size_t cap_;
};

// ---------------------------------------------------------------------------
// Direct theorem evaluators. Every loop scans subsets in canonical order so
// the first witness recorded is the canonically first one.
// ---------------------------------------------------------------------------

void eval_t21a(const Ctx& c, Sink& sink) {
  const auto& ro = c.t.regular_open_bits();
  const auto& opens = c.t.open_bits();
  const auto& intcl = c.t.interior_closure_of_opens();
  for (Bits a = 0;; ++a) {
    Bits via_ro = 0;
    for (Bits r : ro)
      if ((r & ~a) == 0) via_ro |= r;
    Bits via_opens = 0;
    for (size_t i = 0; i < opens.size(); ++i)
      if ((intcl[i] & ~a) == 0) via_opens |= opens[i];
    if (via_ro != via_opens) {
      sink.add({a}, "delta-interior forms disagree: regular-open union " + c.set_text(via_ro) +
                        ", open-neighborhood form " + c.set_text(via_opens));
      return;
    }
    if (a == c.full) break;
  }
}

void eval_t21b(const Ctx& c, Sink& sink) {
  for (Bits a = 0;; ++a) {
    const Bits pointwise = c.t.delta_closure_bits(a);
    Bits via_rc = c.full;
    for (Bits r : c.t.regular_closed_family().member_bits())
      if ((a & ~r) == 0) via_rc &= r;
    if (pointwise != via_rc) {
      sink.add({a}, "delta-closure forms disagree: pointwise " + c.set_text(pointwise) +
                        ", regular-closed intersection " + c.set_text(via_rc));
      return;
    }
    if (a == c.full) break;
  }
}

void eval_t21c(const Ctx& c, Sink& sink) {
  for (Bits a = 0;; ++a) {
    if (c.t.delta_closure_bits(a ^ c.full) != (c.t.delta_interior_bits(a) ^ c.full)) {
      sink.add({a}, "delta-cl(complement) differs from complement(delta-int)");
      return;
    }
    if (a == c.full) break;
  }
}

void eval_t21d(const Ctx& c, Sink& sink) {
  for (Bits a = 0;; ++a) {
    if (c.t.delta_interior_bits(a ^ c.full) != (c.t.delta_closure_bits(a) ^ c.full)) {
      sink.add({a}, "delta-int(complement) differs from complement(delta-cl)");
      return;
    }
    if (a == c.full) break;
  }
}

void eval_c23(const Ctx& c, Sink& sink) {
  // Toggle every subset in and out of the primal family; both axiom forms
  // must agree on each perturbed family.
  for (Bits m = 0;; ++m) {
    const SetFamily perturbed =
        c.p.contains_bits(m) ? c.p.members().without(m) : c.p.members().with(m);
    if (satisfies_primal_axioms(perturbed) != satisfies_primal_axioms_dual(perturbed)) {
      sink.add({m}, "direct and complement-form primal axioms disagree after toggling " +
                        c.set_text(m));
      return;
    }
    if (m == c.full) break;
  }
}

void eval_t36a(const Ctx& c, Sink& sink) {
  for (Bits a = 0;; ++a) {
    if (c.dia[a] & ~c.diaR[a]) {
      sink.add({a}, "diamond " + c.set_text(c.dia[a]) + " not contained in diamond-r " +
                        c.set_text(c.diaR[a]));
      return;
    }
    if (a == c.full) break;
  }
}

void eval_t36b(const Ctx& c, Sink& sink) {
  for (Bits a = 0;; ++a) {
    if (c.delta_closed(a) && (c.diaR[a] & ~a)) {
      sink.add({a}, "delta-closed set does not absorb its diamond-r " + c.set_text(c.diaR[a]));
      return;
    }
    if (a == c.full) break;
  }
}

void eval_t36c(const Ctx& c, Sink& sink) {
  if (c.diaR[0] != 0) sink.add({0}, "diamond-r of the empty set is " + c.set_text(c.diaR[0]));
}

void eval_t36d(const Ctx& c, Sink& sink) {
  for (Bits a = 0;; ++a) {
    if (!c.tau_delta().contains_bits(c.diaR[a] ^ c.full)) {
      sink.add({a}, "diamond-r value " + c.set_text(c.diaR[a]) + " is not delta-closed");
      return;
    }
    if (a == c.full) break;
  }
}

void eval_t36e(const Ctx& c, Sink& sink) {
  for (Bits a = 0;; ++a) {
    if (c.diaR[c.diaR[a]] & ~c.diaR[a]) {
      sink.add({a}, "diamond-r applied twice grew: " + c.set_text(c.diaR[c.diaR[a]]));
      return;
    }
    if (a == c.full) break;
  }
}

void eval_t36f(const Ctx& c, Sink& sink) {
  for (Bits b = 0;; ++b) {
    for (Bits a = b;; a = (a - 1) & b) {
      if (c.diaR[a] & ~c.diaR[b]) {
        sink.add({a, b}, "monotonicity fails: diamond-r " + c.set_text(c.diaR[a]) +
                             " not inside " + c.set_text(c.diaR[b]));
        return;
      }
      if (a == 0) break;
    }
    if (b == c.full) break;
  }
}

void eval_t36g(const Ctx& c, Sink& sink) {
  for (Bits a = 0;; ++a) {
    for (Bits b = a;; ++b) {
      if (c.diaR[a | b] != (c.diaR[a] | c.diaR[b])) {
        sink.add({a, b}, "diamond-r of the union is " + c.set_text(c.diaR[a | b]) +
                             ", union of values is " + c.set_text(c.diaR[a] | c.diaR[b]));
        return;
      }
      if (b == c.full) break;
    }
    if (a == c.full) break;
  }
}

void eval_t36h(const Ctx& c, Sink& sink) {
  for (Bits a = 0;; ++a) {
    for (Bits b = a;; ++b) {
      if (c.diaR[a & b] & ~(c.diaR[a] & c.diaR[b])) {
        sink.add({a, b}, "diamond-r of the intersection escapes the intersection of values");
        return;
      }
      if (b == c.full) break;
    }
    if (a == c.full) break;
  }
}

void eval_tmt(const Ctx& c, Sink& sink) {
  for (Bits a : c.tau_delta().member_bits()) {
    for (Bits b = 0;; ++b) {
      if ((a & c.diaR[b]) & ~c.diaR[a & b]) {
        sink.add({a, b}, "delta-open " + c.set_text(a) + " meets diamond-r(" + c.set_text(b) +
                             ") outside diamond-r of the intersection");
        return;
      }
      if (b == c.full) break;
    }
  }
}

void eval_teq(const Ctx& c, Sink& sink) {
  const bool whole_fixed = c.diaR[c.full] == c.full;
  bool proper_rc_in_primal = true;
  for (Bits r : c.t.regular_closed_family().member_bits())
    if (r != c.full && !c.p.contains_bits(r)) {
      proper_rc_in_primal = false;
      break;
    }
  bool regular_opens_expand = true;
  Bits ro_witness = 0;
  for (Bits r : c.t.regular_open_bits())
    if (r & ~c.diaR[r]) {
      regular_opens_expand = false;
      ro_witness = r;
      break;
    }
  if (whole_fixed != proper_rc_in_primal || proper_rc_in_primal != regular_opens_expand) {
    std::ostringstream note;
    note << "equivalence breaks: X fixed by diamond-r = " << whole_fixed
         << ", proper regular-closed sets in primal = " << proper_rc_in_primal
         << ", regular opens expand = " << regular_opens_expand;
    sink.add({ro_witness}, note.str());
  }
}

void eval_t5(const Ctx& c, Sink& sink) {
  for (Bits a = 0;; ++a) {
    if (c.diaR[a] != 0 && !c.p.contains_bits(a ^ c.full)) {
      sink.add({a}, "diamond-r nonempty but the complement is outside the primal");
      return;
    }
    if (a == c.full) break;
  }
}

void eval_c20(const Ctx& c, Sink& sink) {
  for (Bits a = 0;; ++a) {
    if (!c.p.contains_bits(a ^ c.full) && c.diaR[a] != 0) {
      sink.add({a}, "complement outside the primal but diamond-r is " + c.set_text(c.diaR[a]));
      return;
    }
    if (a == c.full) break;
  }
}

void eval_t4(const Ctx& c, Sink& sink) {
  for (Bits a = 0;; ++a) {
    for (Bits b = 0;; ++b) {
      if ((c.diaR[a] & ~c.diaR[b]) != (c.diaR[a & ~b] & ~c.diaR[b])) {
        sink.add({a, b}, "difference identity fails");
        return;
      }
      if (b == c.full) break;
    }
    if (a == c.full) break;
  }
}

void eval_t14(const Ctx& c, Sink& sink) {
  for (Bits b = 0;; ++b) {
    if (!c.p.contains_bits(b ^ c.full)) {
      for (Bits a = 0;; ++a) {
        if (c.diaR[a | b] != c.diaR[a] || c.diaR[a] != c.diaR[a & ~b]) {
          sink.add({a, b}, "union/difference invariance fails for a set whose complement is "
                           "outside the primal");
          return;
        }
        if (a == c.full) break;
      }
    }
    if (b == c.full) break;
  }
}

void eval_tcl(const Ctx& c, Sink& sink) {
  if (c.clR(0) != 0) {
    sink.add({0}, "cl-r of the empty set is " + c.set_text(c.clR(0)));
    return;
  }
  if (c.clR(c.full) != c.full) {
    sink.add({c.full}, "cl-r of the whole space is " + c.set_text(c.clR(c.full)));
    return;
  }
  for (Bits a = 0;; ++a) {
    if ((a & ~c.cl(a)) || (c.cl(a) & ~c.clR(a))) {
      sink.add({a}, "chain A within cl within cl-r fails");
      return;
    }
    if (c.clR(c.clR(a)) != c.clR(a)) {
      sink.add({a}, "cl-r is not idempotent");
      return;
    }
    if (a == c.full) break;
  }
  for (Bits b = 0;; ++b) {
    for (Bits a = b;; a = (a - 1) & b) {
      if (c.clR(a) & ~c.clR(b)) {
        sink.add({a, b}, "cl-r is not monotone");
        return;
      }
      if (a == 0) break;
    }
    if (b == c.full) break;
  }
  for (Bits a = 0;; ++a) {
    for (Bits b = a;; ++b) {
      if (c.clR(a | b) != (c.clR(a) | c.clR(b))) {
        sink.add({a, b}, "cl-r is not additive");
        return;
      }
      if (b == c.full) break;
    }
    if (a == c.full) break;
  }
}

void eval_kur(const Ctx& c, Sink& sink) {
  const OperatorTable table = OperatorTable::build(c.s, OperatorTable::Kind::ClDiamondR);
  const KuratowskiReport report = kuratowski_check(table);
  if (report.all_passed()) return;
  if (!report.preserves_empty.passed)
    sink.add(report.preserves_empty.witness, "cl-r does not preserve the empty set");
  else if (!report.extensive.passed)
    sink.add(report.extensive.witness, "cl-r is not extensive");
  else if (!report.additive.passed)
    sink.add(report.additive.witness, "cl-r is not additive");
  else
    sink.add(report.idempotent.witness, "cl-r is not idempotent");
}

void eval_ttau(const Ctx& c, Sink& sink) {
  for (Bits m : c.tau_delta().member_bits()) {
    if (!c.tau_r.contains_bits(m)) {
      sink.add({m}, "delta-open set not open in tau-r");
      return;
    }
    if (!c.tau().contains_bits(m)) {
      sink.add({m}, "delta-open set not open in tau");
      return;
    }
  }
  for (Bits m : c.tau_r.member_bits())
    if (!c.tau_d.contains_bits(m)) {
      sink.add({m}, "tau-r member not open in tau-diamond");
      return;
    }
  for (Bits m : c.tau().member_bits())
    if (!c.tau_d.contains_bits(m)) {
      sink.add({m}, "open set not open in tau-diamond");
      return;
    }
}

void eval_tmem(const Ctx& c, Sink& sink) {
  const auto& ro = c.t.regular_open_bits();
  for (Bits a = 0;; ++a) {
    bool characterized = true;
    for (int x = 0; x < c.n && characterized; ++x) {
      const Bits px = static_cast<Bits>(1u) << x;
      if (!(a & px)) continue;
      bool found = false;
      for (Bits u : ro) {
        if ((u & px) && !c.p.contains_bits((u ^ c.full) | a)) {
          found = true;
          break;
        }
      }
      characterized = found;
    }
    if (c.tau_r.contains_bits(a) != characterized) {
      sink.add({a}, "regular-open witness characterization of tau-r membership fails");
      return;
    }
    if (!c.p.contains_bits(a) && !c.tau_r.contains_bits(a)) {
      sink.add({a}, "set outside the primal is not tau-r open");
      return;
    }
    if (a == c.full) break;
  }
}

std::string tau_r_info(const Ctx& c) {
  std::ostringstream out;
  out << "tau-r members: " << c.tau_r.size();
  if (c.tau_r.size() == static_cast<size_t>(c.full) + 1) out << " (tau-r=2^X)";
  out << "; primal members: " << c.p.size();
  if (c.p.size() == 0) out << " (empty)";
  if (c.p.size() == static_cast<size_t>(c.full)) out << " (maximal)";
  return out.str();
}

void eval_text(const Ctx& c, Sink& sink) {
  if (c.p.size() == 0 && c.tau_r.size() != static_cast<size_t>(c.full) + 1) {
    sink.add({}, "empty primal but tau-r is not the full powerset");
    return;
  }
  if (c.p.size() == static_cast<size_t>(c.full) && c.tau_r != c.tau_delta())
    sink.add({}, "maximal primal but tau-r differs from tau-delta");
}

void eval_tbase(const Ctx& c, Sink& sink) {
  const SetFamily base = base_family(c.s);
  const Topology generated = topology_from_base(base);
  if (generated.opens() != c.tau_r) {
    Bits diff = 0;
    for (Bits m : generated.opens().member_bits())
      if (!c.tau_r.contains_bits(m)) {
        diff = m;
        break;
      }
    for (Bits m : c.tau_r.member_bits())
      if (!generated.opens().contains_bits(m)) {
        diff = m;
        break;
      }
    sink.add({diff}, "topology generated by the base differs from tau-r");
  }
}

void eval_tmono(const Ctx& c, Sink& sink) {
  std::vector<Primal> pool;
  if (c.n <= 4) {
    pool = enumerate_primals(c.s.universe_ptr());
  } else {
    pool.push_back(Primal::empty(c.s.universe_ptr()));
    pool.push_back(Primal::all_proper_subsets(c.s.universe_ptr()));
    for (const auto& name : c.s.universe().points())
      pool.push_back(Primal::point_primal(c.s.universe_ptr(), name));
  }
  for (const Primal& q : pool) {
    const bool p_in_q = q.members().includes(c.p.members());
    const bool q_in_p = c.p.members().includes(q.members());
    if (!p_in_q && !q_in_p) continue;
    const PrimalSpace sq = PrimalSpace::create(c.t, q);
    const SetFamily tau_r_q = tau_diamond_r(sq);
    const SetFamily& smaller = p_in_q ? tau_r_q : c.tau_r;   // larger primal
    const SetFamily& larger = p_in_q ? c.tau_r : tau_r_q;    // smaller primal
    for (Bits m : smaller.member_bits()) {
      if (!larger.contains_bits(m)) {
        sink.add({m}, "larger primal " + q.members().to_string() +
                          " induced a tau-r member missing under the smaller primal");
        return;
      }
    }
  }
}

void eval_treg_impl(const Ctx& c, Sink& sink, bool premise, const char* premise_name) {
  if (!premise) return;
  for (Bits a = 0;; ++a) {
    if (c.dia[a] != c.diaR[a]) {
      sink.add({a}, std::string(premise_name) + " space but diamond " + c.set_text(c.dia[a]) +
                        " differs from diamond-r " + c.set_text(c.diaR[a]));
      return;
    }
    if (a == c.full) break;
  }
  if (c.tau_r != c.tau_d) sink.add({}, std::string(premise_name) + " space but tau-r differs from tau-diamond");
}

void eval_treg(const Ctx& c, Sink& sink) {
  eval_treg_impl(c, sink, c.t.is_regular_space(), "regular");
}

void eval_thaus(const Ctx& c, Sink& sink) {
  // On a finite universe Hausdorff forces the discrete topology, so this
  // exercises the coincidence only in that degenerate case.
  eval_treg_impl(c, sink, c.t.is_hausdorff(), "Hausdorff");
}

void eval_roint(const Ctx& c, Sink& sink) {
  const auto& ro = c.t.regular_open_bits();
  for (size_t i = 0; i < ro.size(); ++i)
    for (size_t j = i; j < ro.size(); ++j)
      if (!c.t.regular_open_family().contains_bits(ro[i] & ro[j])) {
        sink.add({ro[i], ro[j]}, "intersection of regular opens is not regular open");
        return;
      }
}

void eval_taud(const Ctx& c, Sink& sink) {
  try {
    Topology::validate(c.tau_delta());
  } catch (const TopologyValidationError& e) {
    sink.add(e.witness(), std::string("delta-open family is not a topology: ") + e.what());
    return;
  }
  for (Bits m : c.t.regular_open_bits())
    if (!c.tau().contains_bits(m)) {
      sink.add({m}, "regular open set is not open");
      return;
    }
  for (Bits m : c.tau_delta().member_bits())
    if (!c.tau().contains_bits(m)) {
      sink.add({m}, "delta-open set is not open");
      return;
    }
}

// ---------------------------------------------------------------------------
// Converse / independence searches: a recorded witness refutes the claim.
// ---------------------------------------------------------------------------

void eval_conv_t36h(const Ctx& c, Sink& sink) {
  for (Bits a = 0;; ++a) {
    for (Bits b = a;; ++b) {
      const Bits left = c.diaR[a & b];
      const Bits right = c.diaR[a] & c.diaR[b];
      if (left != right) {
        sink.add({a, b}, "strict: diamond-r of the intersection is " + c.set_text(left) +
                             " but the intersection of values is " + c.set_text(right));
        return;
      }
      if (b == c.full) break;
    }
    if (a == c.full) break;
  }
}

void eval_conv_t33b(const Ctx& c, Sink& sink) {
  for (Bits a = 0;; ++a) {
    if (c.tau_r.contains_bits(a) && c.p.contains_bits(a)) {
      sink.add({a}, "set is tau-r open yet belongs to the primal");
      return;
    }
    if (a == c.full) break;
  }
}

void eval_conv_text_a(const Ctx& c, Sink& sink) {
  if (c.tau_r.size() == static_cast<size_t>(c.full) + 1 && c.p.size() > 0) {
    Bits member = 0;
    for (Bits m : c.p.members().member_bits())
      if (m != 0) {
        member = m;
        break;
      }
    sink.add({member}, "tau-r equals the full powerset although the primal is nonempty");
  }
}

void eval_conv_text_b(const Ctx& c, Sink& sink) {
  if (c.tau_r == c.tau_delta() && c.p.size() != static_cast<size_t>(c.full)) {
    Bits missing = 0;
    for (Bits m = 0; m < c.full; ++m)
      if (!c.p.contains_bits(m)) {
        missing = m;
        break;
      }
    sink.add({missing}, "tau-r equals tau-delta although the primal is not maximal");
  }
}

void eval_conv_diag_rd(const Ctx& c, Sink& sink) {
  for (Bits m : c.tau_r.member_bits())
    if (!c.tau_delta().contains_bits(m)) {
      sink.add({m}, "tau-r open but not delta-open");
      return;
    }
}

void eval_conv_diag_dr(const Ctx& c, Sink& sink) {
  for (Bits m : c.tau_d.member_bits())
    if (!c.tau_r.contains_bits(m)) {
      sink.add({m}, "tau-diamond open but not tau-r open");
      return;
    }
}

void eval_conv_diag_dt(const Ctx& c, Sink& sink) {
  for (Bits m : c.tau_d.member_bits())
    if (!c.tau().contains_bits(m)) {
      sink.add({m}, "tau-diamond open but not open");
      return;
    }
}

void eval_indep_tau(const Ctx& c, Sink& sink) {
  Bits in_tau_only = 0;
  bool found_tau_only = false;
  for (Bits m : c.tau().member_bits())
    if (!c.tau_r.contains_bits(m)) {
      in_tau_only = m;
      found_tau_only = true;
      break;
    }
  Bits in_tau_r_only = 0;
  bool found_tau_r_only = false;
  for (Bits m : c.tau_r.member_bits())
    if (!c.tau().contains_bits(m)) {
      in_tau_r_only = m;
      found_tau_r_only = true;
      break;
    }
  if (found_tau_only && found_tau_r_only)
    sink.add({in_tau_only, in_tau_r_only},
             c.set_text(in_tau_only) + " is open but not tau-r open; " +
                 c.set_text(in_tau_r_only) + " is tau-r open but not open");
}

// ---------------------------------------------------------------------------
// Catalog.
// ---------------------------------------------------------------------------

using Eval = void (*)(const Ctx&, Sink&);

struct Entry {
  TheoremInfo info;
  Eval eval;
  std::string (*info_text)(const Ctx&) = nullptr;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"T2.1a", TheoremKind::Direct,
        "delta-interior computed from regular opens equals the open-neighborhood int(cl(U)) form"},
       &eval_t21a},
      {{"T2.1b", TheoremKind::Direct,
        "delta-closure computed pointwise equals the intersection of regular-closed supersets"},
       &eval_t21b},
      {{"T2.1c", TheoremKind::Direct,
        "delta-closure of the complement is the complement of the delta-interior"},
       &eval_t21c},
      {{"T2.1d", TheoremKind::Direct,
        "delta-interior of the complement is the complement of the delta-closure"},
       &eval_t21d},
      {{"C2.3", TheoremKind::Direct,
        "the direct and complement-form primal axioms accept exactly the same families"},
       &eval_c23},
      {{"T3.6a", TheoremKind::Direct, "diamond(A) is contained in diamond-r(A)"}, &eval_t36a},
      {{"T3.6b", TheoremKind::Direct, "delta-closed sets contain their diamond-r"}, &eval_t36b},
      {{"T3.6c", TheoremKind::Direct, "diamond-r of the empty set is empty"}, &eval_t36c},
      {{"T3.6d", TheoremKind::Direct, "diamond-r values are delta-closed"}, &eval_t36d},
      {{"T3.6e", TheoremKind::Direct, "diamond-r applied twice is contained in one application"},
       &eval_t36e},
      {{"T3.6f", TheoremKind::Direct, "diamond-r is monotone"}, &eval_t36f},
      {{"T3.6g", TheoremKind::Direct, "diamond-r distributes over unions"}, &eval_t36g},
      {{"T3.6h", TheoremKind::Direct,
        "diamond-r of an intersection is contained in the intersection of the values"},
       &eval_t36h},
      {{"TMT", TheoremKind::Direct,
        "for delta-open A, A meets diamond-r(B) only inside diamond-r(A intersect B)"},
       &eval_tmt},
      {{"TEQ", TheoremKind::Direct,
        "X fixed by diamond-r, proper regular-closed sets in the primal, and regular opens "
        "expanding are equivalent"},
       &eval_teq},
      {{"T5", TheoremKind::Direct,
        "a nonempty diamond-r forces the complement into the primal"},
       &eval_t5},
      {{"C20", TheoremKind::Direct,
        "a complement outside the primal forces an empty diamond-r"},
       &eval_c20},
      {{"T4", TheoremKind::Direct,
        "diamond-r difference identity through the set difference"},
       &eval_t4},
      {{"T14", TheoremKind::Direct,
        "sets whose complement is outside the primal change nothing under union or difference"},
       &eval_t14},
      {{"TCL", TheoremKind::Direct,
        "cl-r fixes the empty set and the space, is extensive above cl, monotone, additive and "
        "idempotent"},
       &eval_tcl},
      {{"KUR", TheoremKind::Direct, "cl-r satisfies the four Kuratowski closure axioms"},
       &eval_kur},
      {{"TTAU", TheoremKind::Direct,
        "tau-delta within tau-r within tau-diamond, and tau within tau-diamond"},
       &eval_ttau},
      {{"TMEM", TheoremKind::Direct,
        "tau-r membership is characterized by regular-open witnesses; non-members of the primal "
        "are tau-r open"},
       &eval_tmem},
      {{"TEXT", TheoremKind::Direct,
        "an empty primal induces the discrete tau-r; the maximal primal collapses tau-r to "
        "tau-delta"},
       &eval_text, &tau_r_info},
      {{"TBASE", TheoremKind::Direct,
        "intersections of delta-open sets with non-members of the primal form a base of tau-r"},
       &eval_tbase},
      {{"TMONO", TheoremKind::Direct, "a larger primal induces a coarser tau-r"}, &eval_tmono},
      {{"TREG", TheoremKind::Direct,
        "in a regular space diamond and diamond-r coincide, and so do the induced topologies"},
       &eval_treg},
      {{"THAUS", TheoremKind::Direct,
        "in a (finite, hence discrete) Hausdorff space diamond and diamond-r coincide"},
       &eval_thaus},
      {{"RO-INT", TheoremKind::Direct,
        "regular open sets are closed under pairwise intersection"},
       &eval_roint},
      {{"TAUD", TheoremKind::Direct,
        "the delta-open family is itself a topology and every regular open or delta-open set is "
        "open"},
       &eval_taud},
      // Refutable claims: a witness refutes the stated implication.
      {{"CONV-T3.6h", TheoremKind::Converse,
        "claim: diamond-r of an intersection always equals the intersection of the values"},
       &eval_conv_t36h},
      {{"CONV-T3.3b", TheoremKind::Converse,
        "claim: every tau-r open set lies outside the primal"},
       &eval_conv_t33b},
      {{"CONV-TEXT-a", TheoremKind::Converse,
        "claim: tau-r equal to the full powerset forces an empty primal"},
       &eval_conv_text_a},
      {{"CONV-TEXT-b", TheoremKind::Converse,
        "claim: tau-r equal to tau-delta forces the maximal primal"},
       &eval_conv_text_b},
      {{"CONV-DIAG-RD", TheoremKind::Converse, "claim: every tau-r open set is delta-open"},
       &eval_conv_diag_rd},
      {{"CONV-DIAG-DR", TheoremKind::Converse, "claim: every tau-diamond open set is tau-r open"},
       &eval_conv_diag_dr},
      {{"CONV-DIAG-DT", TheoremKind::Converse, "claim: every tau-diamond open set is open"},
       &eval_conv_diag_dt},
      {{"INDEP-TAU", TheoremKind::Converse,
        "claim: tau and tau-r are comparable (one always contains the other)"},
       &eval_indep_tau},
  };
  return table;
}

const Entry& require_entry(std::string_view id) {
  for (const Entry& e : entries())
    if (e.info.id == id) return e;
  throw Error("unknown-theorem", "unknown theorem id \"" + std::string(id) + "\"");
}

constexpr size_t kDirectWitnessCap = 1;
constexpr size_t kConverseWitnessCap = 5;
constexpr int kSweepMaxPoints = 4;
constexpr int kExhaustiveMaxPoints = 3;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::span<const TheoremInfo> theorem_catalog() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    out.reserve(entries().size());
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const TheoremInfo* find_theorem(std::string_view id) {
  for (const Entry& e : entries())
    if (e.info.id == id) return &e.info;
  return nullptr;
}

const TheoremInfo& require_theorem(std::string_view id) { return require_entry(id).info; }

CheckReport check_theorem(std::string_view id, const PrimalSpace& space) {
  const Entry& entry = require_entry(id);
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.theorem_id = std::string(id);
  report.kind = entry.info.kind;
  report.spaces_checked = 1;

  const Ctx ctx(space);
  Sink sink(ctx, &report.witnesses,
            entry.info.kind == TheoremKind::Direct ? kDirectWitnessCap : kConverseWitnessCap);
  entry.eval(ctx, sink);
  report.passed = report.witnesses.empty();
  if (entry.info_text) report.info = entry.info_text(ctx);
  report.elapsed_seconds = seconds_since(start);
  return report;
}

std::string SweepStrategy::label() const {
  if (mode == Mode::Exhaustive) return "exhaustive";
  std::ostringstream out;
  out << "sampled(k=" << samples << ",seed=" << seed << ")";
  return out.str();
}

std::vector<std::string> default_point_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

std::vector<Topology> enumerate_topologies(const UniversePtr& universe) {
  const int n = universe->size();
  if (n > kSweepMaxPoints)
    throw BoundError("bound-exceeded", "topology enumeration supports at most " +
                                           std::to_string(kSweepMaxPoints) + " points, got " +
                                           std::to_string(n));
  const Bits full = universe->full_mask();
  const std::uint32_t subset_count = static_cast<std::uint32_t>(full) + 1;
  const std::uint64_t family_count = std::uint64_t{1} << subset_count;

  std::vector<Topology> out;
  std::vector<Bits> members;
  for (std::uint64_t family = 0; family < family_count; ++family) {
    if (!(family & 1u)) continue;                 // empty set
    if (!((family >> full) & 1u)) continue;       // whole space
    members.clear();
    for (std::uint32_t m = 0; m < subset_count; ++m)
      if ((family >> m) & 1u) members.push_back(static_cast<Bits>(m));
    bool closed = true;
    for (size_t i = 0; i < members.size() && closed; ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        if (!((family >> (members[i] | members[j])) & 1u) ||
            !((family >> (members[i] & members[j])) & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(Topology::validate(SetFamily(universe, members)));
  }
  return out;
}

namespace {

struct SweepState {
  CheckReport report;
  const Entry* entry;
  bool done = false;  // direct theorem already failed; stop evaluating
};

std::vector<CheckReport> run_sweep(std::span<const std::string> ids, int n,
                                   const SweepStrategy& strategy, bool stop_at_first_witness) {
  if (n < 1 || n > kSweepMaxPoints)
    throw BoundError("bound-exceeded",
                     "sweeps support 1 to " + std::to_string(kSweepMaxPoints) + " points, got " +
                         std::to_string(n));
  if (strategy.mode == SweepStrategy::Mode::Exhaustive && n > kExhaustiveMaxPoints)
    throw BoundError("bound-exceeded",
                     "exhaustive sweeps support at most " + std::to_string(kExhaustiveMaxPoints) +
                         " points; " + std::to_string(n) + " points require the sampled strategy");

  std::vector<SweepState> states;
  states.reserve(ids.size());
  for (const auto& id : ids) {
    SweepState st;
    st.entry = &require_entry(id);
    st.report.theorem_id = id;
    st.report.kind = st.entry->info.kind;
    st.report.strategy = strategy.label();
    if (strategy.mode == SweepStrategy::Mode::Sampled) st.report.seed = strategy.seed;
    states.push_back(std::move(st));
  }

  const UniversePtr universe = Universe::make(default_point_names(n));
  const std::vector<Topology> topologies = enumerate_topologies(universe);
  const std::vector<Primal> primals = enumerate_primals(universe);

  auto visit = [&](const Topology& t, const Primal& p) -> bool {
    const PrimalSpace space = PrimalSpace::create(t, p);
    const Ctx ctx(space);
    bool all_done = true;
    for (SweepState& st : states) {
      if (st.done) continue;
      const auto start = std::chrono::steady_clock::now();
      const size_t cap = st.entry->info.kind == TheoremKind::Direct ? kDirectWitnessCap
                                                                    : kConverseWitnessCap;
      Sink sink(ctx, &st.report.witnesses, cap);
      st.entry->eval(ctx, sink);
      st.report.elapsed_seconds += seconds_since(start);
      st.report.spaces_checked += 1;
      if (!st.report.witnesses.empty()) {
        st.report.passed = false;
        if (st.entry->info.kind == TheoremKind::Direct || stop_at_first_witness) st.done = true;
      }
      all_done = all_done && st.done;
    }
    return !(all_done && !states.empty());
  };

  if (strategy.mode == SweepStrategy::Mode::Exhaustive) {
    bool keep_going = true;
    for (const Topology& t : topologies) {
      for (const Primal& p : primals) {
        keep_going = visit(t, p);
        if (!keep_going) break;
      }
      if (!keep_going) break;
    }
  } else {
    std::mt19937_64 rng(strategy.seed);
    for (int i = 0; i < strategy.samples; ++i) {
      const size_t ti = static_cast<size_t>(rng() % topologies.size());
      const size_t pi = static_cast<size_t>(rng() % primals.size());
      if (!visit(topologies[ti], primals[pi])) break;
    }
  }

  std::vector<CheckReport> out;
  out.reserve(states.size());
  for (SweepState& st : states) out.push_back(std::move(st.report));
  return out;
}

}  // namespace

CheckReport sweep_theorem(std::string_view id, int n, const SweepStrategy& strategy) {
  const std::string ids[] = {std::string(id)};
  return run_sweep(ids, n, strategy, false)[0];
}

std::vector<CheckReport> sweep_catalog(std::span<const std::string> ids, int n,
                                       const SweepStrategy& strategy) {
  return run_sweep(ids, n, strategy, false);
}

CheckReport find_counterexample(std::string_view id, int n, const SweepStrategy& strategy) {
  const Entry& entry = require_entry(id);
  if (entry.info.kind != TheoremKind::Converse)
    throw Error("not-a-converse",
                "theorem \"" + std::string(id) + "\" is a direct theorem; counterexample search "
                "applies to CONV-* and INDEP-* claims");
  const std::string ids[] = {std::string(id)};
  return run_sweep(ids, n, strategy, true)[0];
}

}  // namespace primaltop
