// Clone specifications over the boolean domain and their reduction to a
// concrete algorithm.  A specification is either a named base from the
// reduced lattice of boolean clones (each listed with its generating set)
// or an explicit list of operation tables over any finite domain.
//
// Named bases accept modifiers:
//   +0 / +1   adjoin a constant operation; reduced by inserting the constant
//             vector into the family (requires a nonempty family),
//   dual      swap every generator for its dual; reduced by complementing the
//             family, running the base algorithm, and complementing outputs,
//   +neg      adjoin negation; reduced by closing the family under
//             complement, legal only when the generating set is closed under
//             duality as a set (otherwise the reduction is unsound).
// With +neg present, one adjoined constant implies the other (negation maps
// them onto each other), so both are inserted to keep the reduction exact.
#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "clenum/errors.hpp"
#include "clenum/family.hpp"
#include "clenum/multidomain.hpp"
#include "clenum/operation.hpp"
#include "clenum/oracle.hpp"

namespace clenum {

enum class CloneBase {
  kEmpty,        // no operations: the closure is the family itself
  kXor3,         // x + y + z
  kXor2,         // x + y
  kAnd,          // conjunction
  kAndOrK,       // threshold + x and (y or z), parameterized by k
  kAndOr,        // x and (y or z)
  kAndImpK,      // threshold + x and (y -> z), parameterized by k
  kAndImp,       // x and (y -> z)
  kMaj,          // majority
  kMajXor3,      // majority together with x + y + z
  kLattice,      // conjunction and disjunction
  kIfThenElse,   // if x then y else z
  kOrXor,        // disjunction and x + y
};

inline const char* base_token(CloneBase b) {
  switch (b) {
    case CloneBase::kEmpty: return "I2";
    case CloneBase::kXor3: return "L2";
    case CloneBase::kXor2: return "L0";
    case CloneBase::kAnd: return "E2";
    case CloneBase::kAndOrK: return "S10^k";
    case CloneBase::kAndOr: return "S10";
    case CloneBase::kAndImpK: return "S12^k";
    case CloneBase::kAndImp: return "S12";
    case CloneBase::kMaj: return "D2";
    case CloneBase::kMajXor3: return "D1";
    case CloneBase::kLattice: return "M2";
    case CloneBase::kIfThenElse: return "R2";
    case CloneBase::kOrXor: return "R0";
  }
  return "?";
}

struct CloneSpec {
  bool explicit_ops = false;
  CloneBase base = CloneBase::kEmpty;
  int k = 0;  // threshold parameter for kAndOrK / kAndImpK
  bool add_zero = false;
  bool add_one = false;
  bool dual = false;
  bool add_negation = false;
  std::vector<Operation> ops;  // explicit mode only

  static CloneSpec named(CloneBase b, int k = 0) {
    CloneSpec s;
    s.base = b;
    s.k = k;
    return s;
  }
  static CloneSpec from_operations(std::vector<Operation> ops) {
    CloneSpec s;
    s.explicit_ops = true;
    s.ops = std::move(ops);
    return s;
  }

  std::string to_string() const {
    if (explicit_ops) {
      std::string out = "ops{";
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i) out += ",";
        out += ops[i].name();
      }
      return out + "}";
    }
    std::string out = base_token(base);
    if (base == CloneBase::kAndOrK || base == CloneBase::kAndImpK) {
      out = (base == CloneBase::kAndOrK) ? "S10" : "S12";
      out += "^" + std::to_string(k);
    }
    if (add_zero) out += " +0";
    if (add_one) out += " +1";
    if (dual) out += " dual";
    if (add_negation) out += " +neg";
    return out;
  }
};

// Grammar: "<base>[^k] [+0] [+1] [dual] [+neg]", whitespace separated.
// The unparameterized S10 / S12 tokens denote the limit clones (no threshold
// operation); S10^k / S12^k with k >= 2 include the (k+1)-ary threshold.
inline CloneSpec parse_clone_spec(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  if (toks.empty()) throw ParseError("empty clone specification");

  CloneSpec spec;
  std::string head = toks[0];
  std::string base_part = head;
  std::optional<int> k;
  if (auto caret = head.find('^'); caret != std::string::npos) {
    base_part = head.substr(0, caret);
    const std::string ks = head.substr(caret + 1);
    if (ks.empty() || ks.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed threshold parameter in '" + head + "'");
    k = std::stoi(ks);
  }

  if (base_part == "I2") spec.base = CloneBase::kEmpty;
  else if (base_part == "L2") spec.base = CloneBase::kXor3;
  else if (base_part == "L0") spec.base = CloneBase::kXor2;
  else if (base_part == "E2") spec.base = CloneBase::kAnd;
  else if (base_part == "S10") spec.base = k ? CloneBase::kAndOrK : CloneBase::kAndOr;
  else if (base_part == "S12") spec.base = k ? CloneBase::kAndImpK : CloneBase::kAndImp;
  else if (base_part == "D2") spec.base = CloneBase::kMaj;
  else if (base_part == "D1") spec.base = CloneBase::kMajXor3;
  else if (base_part == "M2") spec.base = CloneBase::kLattice;
  else if (base_part == "R2") spec.base = CloneBase::kIfThenElse;
  else if (base_part == "R0") spec.base = CloneBase::kOrXor;
  else throw ParseError("unknown clone base '" + base_part + "'");

  if (k) {
    if (spec.base != CloneBase::kAndOrK && spec.base != CloneBase::kAndImpK)
      throw ParseError("'^k' is only valid for S10 and S12");
    if (*k < 2) throw ParseError("threshold parameter must be at least 2");
    spec.k = *k;
  }

  for (std::size_t i = 1; i < toks.size(); ++i) {
    const std::string& t = toks[i];
    bool* flag = nullptr;
    if (t == "+0") flag = &spec.add_zero;
    else if (t == "+1") flag = &spec.add_one;
    else if (t == "dual") flag = &spec.dual;
    else if (t == "+neg") flag = &spec.add_negation;
    else throw ParseError("unknown clone modifier '" + t + "'");
    if (*flag) throw ParseError("duplicate clone modifier '" + t + "'");
    *flag = true;
  }
  return spec;
}

// Generating operations of each named base.
inline std::vector<Operation> base_generators(CloneBase base, int k = 0) {
  switch (base) {
    case CloneBase::kEmpty: return {};
    case CloneBase::kXor3: return {ops::xor3()};
    case CloneBase::kXor2: return {ops::xor2()};
    case CloneBase::kAnd: return {ops::and2()};
    case CloneBase::kAndOrK: return {ops::threshold(k), ops::and_or()};
    case CloneBase::kAndOr: return {ops::and_or()};
    case CloneBase::kAndImpK: return {ops::threshold(k), ops::and_imp()};
    case CloneBase::kAndImp: return {ops::and_imp()};
    case CloneBase::kMaj: return {ops::maj3()};
    case CloneBase::kMajXor3: return {ops::maj3(), ops::xor3()};
    case CloneBase::kLattice: return {ops::or2(), ops::and2()};
    case CloneBase::kIfThenElse: return {ops::ite()};
    case CloneBase::kOrXor: return {ops::or2(), ops::xor2()};
  }
  throw SpecError("unknown clone base");
}

// A generating set is self-dual (as a set) when the dual of every generator
// is again a generator; only then is the +neg reduction sound.
inline bool generators_self_dual(const std::vector<Operation>& gens) {
  for (const Operation& f : gens) {
    const Operation fd = dual_of(f);
    bool found = false;
    for (const Operation& g : gens)
      if (g == fd) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// Operation tables that generate the specified clone directly (modifiers
// materialized as constant / negation tables, duals taken literally); used
// by the saturation oracle as an independent ground truth.
inline std::vector<Operation> oracle_generators(const CloneSpec& spec) {
  if (spec.explicit_ops) return spec.ops;
  std::vector<Operation> gens = base_generators(spec.base, spec.k);
  if (spec.dual) {
    for (Operation& f : gens) f = dual_of(f);
  }
  if (spec.add_zero) gens.push_back(ops::const_fn(2, 0));
  if (spec.add_one) gens.push_back(ops::const_fn(2, 1));
  if (spec.add_negation) gens.push_back(ops::not1());
  return gens;
}

// Family preprocessing steps implementing the modifier reductions.

inline Family adjoin_constants(const Family& s, bool zero, bool one) {
  if (!zero && !one) return s;
  if (s.empty_set())
    throw SpecError(
        "adjoining a constant to an empty family is undefined: the closure of "
        "the empty set is empty, but the constant operation would produce a "
        "vector as soon as any argument exists; supply at least one vector");
  Family out = s;
  const int n = s.n();
  if (zero) {
    Vector z(n, 2);
    out.insert(z);
  }
  if (one) {
    Vector o(n, 2);
    o.complement_in_place();
    out.insert(o);
  }
  return out;
}

inline Family dualize_family(const Family& s) {
  if (s.domain() != 2) throw SpecError("dualization requires the boolean domain");
  Family out = Family::empty(2);
  for (const Vector& v : s) out.insert(v.complemented());
  return out;
}

inline Family close_under_negation(const Family& s) {
  if (s.domain() != 2) throw SpecError("negation closure requires the boolean domain");
  Family out = s;
  for (const Vector& v : s) out.insert(v.complemented());
  return out;
}

// Algorithm selected for a resolved instance.
enum class Algo {
  kListOnly,      // no operations: membership = containment in the family
  kMeet,          // conjunction closure
  kSpan,          // GF(2) span
  kAffineSpan,    // odd-size sums: coset of a GF(2) span
  kLattice,       // join of meets characterization
  kLatticeNeg,    // lattice with negation: column-class structure, no fixing
  kMajority,      // pairwise projections under majority
  kNuBoolean,     // Baker-Pixley projections, boolean domain
  kAndOr,         // residual pattern (1,0) after constant-column normalization
  kAndImp,        // residual mixed patterns after constant-column normalization
  kDiscriminator, // if-then-else: column classes with both constants fixed
  kOrXorClasses,  // or + xor: column classes with zero columns fixed
  kNuGeneral,     // Baker-Pixley projections, arbitrary domain
  kGroup,         // commutative group: linear congruence systems
  kAssociative,   // single associative operation: DFS / saturation
  kSaturation,    // fallback: explicit saturation
};

inline const char* algo_name(Algo a) {
  switch (a) {
    case Algo::kListOnly: return "list";
    case Algo::kMeet: return "meet";
    case Algo::kSpan: return "span";
    case Algo::kAffineSpan: return "affine-span";
    case Algo::kLattice: return "lattice";
    case Algo::kLatticeNeg: return "lattice-neg";
    case Algo::kMajority: return "majority";
    case Algo::kNuBoolean: return "nu-boolean";
    case Algo::kAndOr: return "and-or";
    case Algo::kAndImp: return "and-imp";
    case Algo::kDiscriminator: return "discriminator";
    case Algo::kOrXorClasses: return "or-xor-classes";
    case Algo::kNuGeneral: return "nu-general";
    case Algo::kGroup: return "group";
    case Algo::kAssociative: return "associative";
    case Algo::kSaturation: return "saturation";
  }
  return "?";
}

struct ResolveOptions {
  int max_k = 12;                       // cap on the S10^k / S12^k parameter
  std::size_t budget = kDefaultBudget;  // saturation budget for fallback paths
};

// A fully preprocessed instance: the family has all modifier reductions
// applied, complement_outputs records whether results must be complemented
// back (dual reduction), and algorithm-specific data is attached.
struct ResolvedProblem {
  Algo algo = Algo::kListOnly;
  Family family = Family::empty(2);
  bool complement_outputs = false;
  int nu_width = 0;                    // kNuBoolean / kNuGeneral
  std::vector<Operation> generators;   // projection saturation / fallback ops
  std::optional<GroupStructure> group; // kGroup
  std::optional<Operation> assoc_op;   // kAssociative
  std::string warning;                 // nonempty when a fallback was chosen
  std::size_t budget = kDefaultBudget;
};

inline ResolvedProblem resolve(const CloneSpec& spec, const Family& family,
                               const ResolveOptions& opts = {}) {
  ResolvedProblem rp;
  rp.budget = opts.budget;

  if (spec.explicit_ops) {
    rp.family = family;
    for (const Operation& f : spec.ops)
      if (!family.empty_set() && f.domain() != family.domain())
        throw SpecError("operation '" + f.name() + "' domain does not match the family");
    rp.generators = spec.ops;

    // Detector chain: near-unanimity first (strongest structure), then a
    // commutative group, then plain associativity, else saturation.
    int best_nu = 0;
    for (const Operation& f : spec.ops)
      if (auto a = detect_near_unanimity(f))
        if (best_nu == 0 || *a < best_nu) best_nu = *a;
    if (best_nu != 0) {
      rp.algo = (family.domain() == 2) ? Algo::kNuBoolean : Algo::kNuGeneral;
      rp.nu_width = best_nu - 1;
      return rp;
    }
    if (spec.ops.size() == 1 && spec.ops[0].arity() == 2) {
      try {
        rp.group = build_group_structure(spec.ops[0]);
        rp.algo = Algo::kGroup;
        return rp;
      } catch (const SpecError&) {
      }
      try {
        require_associative(spec.ops[0]);
        rp.algo = Algo::kAssociative;
        rp.assoc_op = spec.ops[0];
        return rp;
      } catch (const SpecError&) {
      }
    }
    rp.algo = Algo::kSaturation;
    rp.warning =
        "no structure detected (near-unanimity, commutative group, or "
        "associative); falling back to explicit saturation, which may use "
        "memory and time proportional to the closure size";
    return rp;
  }

  if (!family.empty_set() && family.domain() != 2)
    throw SpecError("named clone bases require the boolean domain");
  if ((spec.base == CloneBase::kAndOrK || spec.base == CloneBase::kAndImpK)) {
    if (spec.k < 2) throw SpecError("threshold parameter must be at least 2");
    if (spec.k > opts.max_k)
      throw SpecError("threshold parameter " + std::to_string(spec.k) +
                      " exceeds the configured cap of " + std::to_string(opts.max_k));
  }

  Family fam = family;
  bool add_zero = spec.add_zero;
  bool add_one = spec.add_one;
  if (spec.add_negation) {
    if (!generators_self_dual(base_generators(spec.base, spec.k)))
      throw SpecError("'+neg' requires a generating set closed under duality; '" +
                      std::string(base_token(spec.base)) + "' is not");
    fam = close_under_negation(fam);
    if (add_zero || add_one) add_zero = add_one = true;
  }
  fam = adjoin_constants(fam, add_zero, add_one);
  if (spec.dual) {
    fam = dualize_family(fam);
    rp.complement_outputs = true;
  }
  rp.family = std::move(fam);

  switch (spec.base) {
    case CloneBase::kEmpty:
      rp.algo = Algo::kListOnly;
      break;
    case CloneBase::kXor3:
      rp.algo = Algo::kAffineSpan;
      break;
    case CloneBase::kXor2:
      rp.algo = Algo::kSpan;
      break;
    case CloneBase::kAnd:
      rp.algo = Algo::kMeet;
      break;
    case CloneBase::kAndOrK:
      // The (k+1)-ary threshold is a near-unanimity operation, so membership
      // reduces to width-k projections (Baker-Pixley).
      rp.algo = Algo::kNuBoolean;
      rp.nu_width = spec.k;
      rp.generators = base_generators(spec.base, spec.k);
      break;
    case CloneBase::kAndOr:
      rp.algo = Algo::kAndOr;
      break;
    case CloneBase::kAndImpK:
      rp.algo = Algo::kNuBoolean;
      rp.nu_width = spec.k;
      rp.generators = base_generators(spec.base, spec.k);
      break;
    case CloneBase::kAndImp:
      rp.algo = Algo::kAndImp;
      break;
    case CloneBase::kMaj:
      rp.algo = Algo::kMajority;
      break;
    case CloneBase::kMajXor3:
      rp.algo = Algo::kNuBoolean;
      rp.nu_width = 2;
      rp.generators = base_generators(spec.base, spec.k);
      break;
    case CloneBase::kLattice:
      rp.algo = spec.add_negation ? Algo::kLatticeNeg : Algo::kLattice;
      break;
    case CloneBase::kIfThenElse:
      rp.algo = Algo::kDiscriminator;
      break;
    case CloneBase::kOrXor:
      rp.algo = Algo::kOrXorClasses;
      break;
  }
  return rp;
}

}  // namespace clenum
