#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mtrace/pivotal.hpp"

namespace mtrace {
namespace dsl {

// Surface syntax ("(x)" is the tensor operator, "." composition, right
// factor acting first; "(x)" binds tighter; both left-associative):
//   OBJ := "1" | NAME | OBJ "(x)" OBJ | "dual(" OBJ ")"
//   M   := "id(" OBJ ")" | "ev_l(" OBJ ")" | "coev_l(" OBJ ")"
//        | "ev_r(" OBJ ")" | "coev_r(" OBJ ")" | "phi(" OBJ ")"
//        | "gamma(" OBJ "," OBJ ")" | NAME | "dual(" M ")"
//        | M "." M | M "(x)" M | "ptr_r(" OBJ "," M ")" | "ptr_l(" OBJ "," M ")"
// The three characters "(x)" always lex as the tensor operator, so a
// parenthesized bare name cannot be spelled "(x)"; rename the object.

struct SyntaxError : Error {
  SyntaxError(int line_, int col_, const std::string& expected_)
      : Error("syntax error at " + std::to_string(line_) + ":" +
              std::to_string(col_) + ", expected " + expected_),
        line(line_),
        col(col_),
        expected(expected_) {}
  int line, col;
  std::string expected;
};

struct TypeError : Error {
  TypeError(int line_, int col_, const std::string& expected_,
            const std::string& found_)
      : Error("type error at " + std::to_string(line_) + ":" +
              std::to_string(col_) + ": expected " + expected_ + ", found " +
              found_),
        line(line_),
        col(col_),
        expected(expected_),
        found(found_) {}
  int line, col;
  std::string expected, found;
};

struct ObjExpr {
  enum class Kind { Unit, Name, Tensor, Dual };
  Kind kind = Kind::Unit;
  std::string name;               // Name
  std::vector<ObjExpr> children;  // Tensor: 2, Dual: 1
  int line = 0, col = 0;
};

struct MorExpr {
  enum class Kind {
    Id, EvL, CoevL, EvR, CoevR, Phi, Gamma, Name, Dual, Compose, Tensor,
    PtrR, PtrL
  };
  Kind kind = Kind::Name;
  std::string name;                // Name
  std::vector<ObjExpr> obj_args;   // structural primitives
  std::vector<MorExpr> children;   // Dual: 1, Compose/Tensor: 2, Ptr: 1
  int line = 0, col = 0;
};

// Strict normal form of an object expression: a flat list of atoms with
// unit factors dropped and dual(1) collapsed to 1.
struct Atom {
  std::string name;                         // set when a named object
  std::shared_ptr<std::vector<Atom>> dual;  // set when dual(<factors>)
  bool operator==(const Atom& o) const;
};
using NormalObj = std::vector<Atom>;
std::string to_string(const NormalObj& o);

struct Env {
  std::map<std::string, ModulePtr> modules;
  struct NamedMorphism {
    Morphism mor;
    NormalObj dom, cod;
  };
  std::map<std::string, NamedMorphism> morphisms;

  void add_module(const std::string& name, const ModulePtr& m);
  // dom/cod given as object expressions over registered names.
  void add_morphism(const std::string& name, const Morphism& m,
                    const std::string& dom_expr, const std::string& cod_expr);
};

ObjExpr parse_object(const std::string& src);
MorExpr parse_morphism(const std::string& src);

std::string print(const ObjExpr& e);
std::string print(const MorExpr& e);

NormalObj normalize(const ObjExpr& e);

struct MorType {
  NormalObj dom, cod;
};
MorType typecheck(const MorExpr& e, const Env& env);

// The module presented by a normal form (left-fold of tensor).
ModulePtr module_of(const NormalObj& o, const Env& env, const HopfPtr& h);

// Exact matrix evaluation; compositional (eval(a.b) = eval(a) eval(b),
// eval(a (x) b) = kron).
Morphism eval(const MorExpr& e, const Env& env, const HopfPtr& h);

// Convenience: parse, typecheck and evaluate.
Morphism eval_str(const std::string& src, const Env& env, const HopfPtr& h);

}  // namespace dsl
}  // namespace mtrace
