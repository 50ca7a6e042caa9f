#include "mtrace/dsl.hpp"

#include <sstream>

namespace mtrace {
namespace dsl {

bool Atom::operator==(const Atom& o) const {
  if ((dual == nullptr) != (o.dual == nullptr)) return false;
  if (!dual) return name == o.name;
  return *dual == *o.dual;
}

std::string to_string(const NormalObj& o) {
  if (o.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i) os << " (x) ";
    if (o[i].dual)
      os << "dual(" << to_string(*o[i].dual) << ")";
    else
      os << o[i].name;
  }
  return os.str();
}

void Env::add_module(const std::string& name, const ModulePtr& m) {
  modules[name] = m;
}

void Env::add_morphism(const std::string& name, const Morphism& m,
                       const std::string& dom_expr,
                       const std::string& cod_expr) {
  morphisms[name] = {m, normalize(parse_object(dom_expr)),
                     normalize(parse_object(cod_expr))};
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Name, Unit, LParen, RParen, Comma, Dot, Tensor, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance(1);
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    int tl = line, tc = col;
    // "(x)" is always the tensor operator.
    if (c == '(' && i + 2 < src.size() && src[i + 1] == 'x' &&
        src[i + 2] == ')') {
      out.push_back({Tok::Tensor, "(x)", tl, tc});
      advance(3);
      continue;
    }
    if (c == '(') {
      out.push_back({Tok::LParen, "(", tl, tc});
      advance(1);
      continue;
    }
    if (c == ')') {
      out.push_back({Tok::RParen, ")", tl, tc});
      advance(1);
      continue;
    }
    if (c == ',') {
      out.push_back({Tok::Comma, ",", tl, tc});
      advance(1);
      continue;
    }
    if (c == '.') {
      out.push_back({Tok::Dot, ".", tl, tc});
      advance(1);
      continue;
    }
    if (c == '1' &&
        (i + 1 >= src.size() || !(isalnum(src[i + 1]) || src[i + 1] == '_'))) {
      out.push_back({Tok::Unit, "1", tl, tc});
      advance(1);
      continue;
    }
    if (isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (isalnum(src[j]) || src[j] == '_')) ++j;
      out.push_back({Tok::Name, src.substr(i, j - i), tl, tc});
      advance(j - i);
      continue;
    }
    throw SyntaxError(tl, tc, "a token (found '" + std::string(1, c) + "')");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;

  const Token& peek() const { return toks[pos]; }
  Token eat(Tok kind, const char* what) {
    if (toks[pos].kind != kind)
      throw SyntaxError(toks[pos].line, toks[pos].col, what);
    return toks[pos++];
  }

  ObjExpr parse_obj() {
    ObjExpr left = parse_obj_atom();
    while (peek().kind == Tok::Tensor) {
      Token t = toks[pos++];
      ObjExpr right = parse_obj_atom();
      ObjExpr node;
      node.kind = ObjExpr::Kind::Tensor;
      node.line = t.line;
      node.col = t.col;
      node.children = {std::move(left), std::move(right)};
      left = std::move(node);
    }
    return left;
  }

  ObjExpr parse_obj_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Unit) {
      ++pos;
      ObjExpr e;
      e.kind = ObjExpr::Kind::Unit;
      e.line = t.line;
      e.col = t.col;
      return e;
    }
    if (t.kind == Tok::LParen) {
      ++pos;
      ObjExpr inner = parse_obj();
      eat(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Name) {
      if (t.text == "dual") {
        ++pos;
        eat(Tok::LParen, "'(' after dual");
        ObjExpr inner = parse_obj();
        eat(Tok::RParen, "')'");
        ObjExpr e;
        e.kind = ObjExpr::Kind::Dual;
        e.line = t.line;
        e.col = t.col;
        e.children = {std::move(inner)};
        return e;
      }
      ++pos;
      ObjExpr e;
      e.kind = ObjExpr::Kind::Name;
      e.name = t.text;
      e.line = t.line;
      e.col = t.col;
      return e;
    }
    throw SyntaxError(t.line, t.col, "an object ('1', a name, or dual(...))");
  }

  MorExpr parse_mor() {
    MorExpr left = parse_term();
    while (peek().kind == Tok::Dot) {
      Token t = toks[pos++];
      MorExpr right = parse_term();
      MorExpr node;
      node.kind = MorExpr::Kind::Compose;
      node.line = t.line;
      node.col = t.col;
      node.children = {std::move(left), std::move(right)};
      left = std::move(node);
    }
    return left;
  }

  MorExpr parse_term() {
    MorExpr left = parse_atom();
    while (peek().kind == Tok::Tensor) {
      Token t = toks[pos++];
      MorExpr right = parse_atom();
      MorExpr node;
      node.kind = MorExpr::Kind::Tensor;
      node.line = t.line;
      node.col = t.col;
      node.children = {std::move(left), std::move(right)};
      left = std::move(node);
    }
    return left;
  }

  MorExpr parse_atom() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      ++pos;
      MorExpr inner = parse_mor();
      eat(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Name)
      throw SyntaxError(t.line, t.col, "a morphism (a name or a builtin)");
    MorExpr e;
    e.line = t.line;
    e.col = t.col;
    const std::string& w = t.text;
    auto obj_call_1 = [&](MorExpr::Kind k) {
      ++pos;
      eat(Tok::LParen, "'('");
      e.kind = k;
      e.obj_args.push_back(parse_obj());
      eat(Tok::RParen, "')'");
      return e;
    };
    if (w == "id") return obj_call_1(MorExpr::Kind::Id);
    if (w == "ev_l") return obj_call_1(MorExpr::Kind::EvL);
    if (w == "coev_l") return obj_call_1(MorExpr::Kind::CoevL);
    if (w == "ev_r") return obj_call_1(MorExpr::Kind::EvR);
    if (w == "coev_r") return obj_call_1(MorExpr::Kind::CoevR);
    if (w == "phi") return obj_call_1(MorExpr::Kind::Phi);
    if (w == "gamma") {
      ++pos;
      eat(Tok::LParen, "'('");
      e.kind = MorExpr::Kind::Gamma;
      e.obj_args.push_back(parse_obj());
      eat(Tok::Comma, "','");
      e.obj_args.push_back(parse_obj());
      eat(Tok::RParen, "')'");
      return e;
    }
    if (w == "dual") {
      ++pos;
      eat(Tok::LParen, "'('");
      e.kind = MorExpr::Kind::Dual;
      e.children.push_back(parse_mor());
      eat(Tok::RParen, "')'");
      return e;
    }
    if (w == "ptr_r" || w == "ptr_l") {
      ++pos;
      eat(Tok::LParen, "'('");
      e.kind = (w == "ptr_r") ? MorExpr::Kind::PtrR : MorExpr::Kind::PtrL;
      e.obj_args.push_back(parse_obj());
      eat(Tok::Comma, "','");
      e.children.push_back(parse_mor());
      eat(Tok::RParen, "')'");
      return e;
    }
    ++pos;
    e.kind = MorExpr::Kind::Name;
    e.name = w;
    return e;
  }
};

}  // namespace

ObjExpr parse_object(const std::string& src) {
  Parser p{lex(src)};
  ObjExpr e = p.parse_obj();
  if (p.peek().kind != Tok::End)
    throw SyntaxError(p.peek().line, p.peek().col, "end of input");
  return e;
}

MorExpr parse_morphism(const std::string& src) {
  Parser p{lex(src)};
  MorExpr e = p.parse_mor();
  if (p.peek().kind != Tok::End)
    throw SyntaxError(p.peek().line, p.peek().col, "end of input");
  return e;
}

// ---------------------------------------------------------------------------
// Printing (canonical; reparses to an equal AST modulo flattening)

std::string print(const ObjExpr& e) {
  switch (e.kind) {
    case ObjExpr::Kind::Unit:
      return "1";
    case ObjExpr::Kind::Name:
      return e.name;
    case ObjExpr::Kind::Dual:
      return "dual(" + print(e.children[0]) + ")";
    case ObjExpr::Kind::Tensor: {
      auto wrap = [](const ObjExpr& c) {
        std::string s = print(c);
        return s;
      };
      return wrap(e.children[0]) + " (x) " + wrap(e.children[1]);
    }
  }
  return "?";
}

std::string print(const MorExpr& e) {
  auto paren_if = [](bool cond, const std::string& s) {
    return cond ? "(" + s + ")" : s;
  };
  switch (e.kind) {
    case MorExpr::Kind::Id:
      return "id(" + print(e.obj_args[0]) + ")";
    case MorExpr::Kind::EvL:
      return "ev_l(" + print(e.obj_args[0]) + ")";
    case MorExpr::Kind::CoevL:
      return "coev_l(" + print(e.obj_args[0]) + ")";
    case MorExpr::Kind::EvR:
      return "ev_r(" + print(e.obj_args[0]) + ")";
    case MorExpr::Kind::CoevR:
      return "coev_r(" + print(e.obj_args[0]) + ")";
    case MorExpr::Kind::Phi:
      return "phi(" + print(e.obj_args[0]) + ")";
    case MorExpr::Kind::Gamma:
      return "gamma(" + print(e.obj_args[0]) + ", " + print(e.obj_args[1]) +
             ")";
    case MorExpr::Kind::Name:
      return e.name;
    case MorExpr::Kind::Dual:
      return "dual(" + print(e.children[0]) + ")";
    case MorExpr::Kind::PtrR:
      return "ptr_r(" + print(e.obj_args[0]) + ", " + print(e.children[0]) +
             ")";
    case MorExpr::Kind::PtrL:
      return "ptr_l(" + print(e.obj_args[0]) + ", " + print(e.children[0]) +
             ")";
    case MorExpr::Kind::Tensor:
      return paren_if(e.children[0].kind == MorExpr::Kind::Compose,
                      print(e.children[0])) +
             " (x) " +
             paren_if(e.children[1].kind == MorExpr::Kind::Compose ||
                          e.children[1].kind == MorExpr::Kind::Tensor,
                      print(e.children[1]));
    case MorExpr::Kind::Compose:
      return print(e.children[0]) + " . " +
             paren_if(e.children[1].kind == MorExpr::Kind::Compose,
                      print(e.children[1]));
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Normalization and types

NormalObj normalize(const ObjExpr& e) {
  switch (e.kind) {
    case ObjExpr::Kind::Unit:
      return {};
    case ObjExpr::Kind::Name:
      return {Atom{e.name, nullptr}};
    case ObjExpr::Kind::Tensor: {
      NormalObj out = normalize(e.children[0]);
      NormalObj right = normalize(e.children[1]);
      out.insert(out.end(), right.begin(), right.end());
      return out;
    }
    case ObjExpr::Kind::Dual: {
      NormalObj inner = normalize(e.children[0]);
      if (inner.empty()) return {};  // dual(1) = 1
      return {Atom{"", std::make_shared<NormalObj>(std::move(inner))}};
    }
  }
  return {};
}

namespace {

NormalObj dual_of(const NormalObj& o) {
  if (o.empty()) return {};
  return {Atom{"", std::make_shared<NormalObj>(o)}};
}

bool ends_with(const NormalObj& whole, const NormalObj& suffix) {
  if (suffix.size() > whole.size()) return false;
  for (std::size_t i = 0; i < suffix.size(); ++i)
    if (!(whole[whole.size() - suffix.size() + i] == suffix[i])) return false;
  return true;
}

bool starts_with(const NormalObj& whole, const NormalObj& prefix) {
  if (prefix.size() > whole.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (!(whole[i] == prefix[i])) return false;
  return true;
}

NormalObj drop_suffix(NormalObj whole, std::size_t n) {
  whole.resize(whole.size() - n);
  return whole;
}

NormalObj drop_prefix(const NormalObj& whole, std::size_t n) {
  return NormalObj(whole.begin() + n, whole.end());
}

NormalObj concat(NormalObj a, const NormalObj& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void check_names_resolve(const NormalObj& o, const Env& env, int line,
                         int col) {
  for (const auto& a : o) {
    if (a.dual) {
      check_names_resolve(*a.dual, env, line, col);
    } else if (!env.modules.count(a.name)) {
      throw TypeError(line, col, "a registered object name", a.name);
    }
  }
}

}  // namespace

MorType typecheck(const MorExpr& e, const Env& env) {
  switch (e.kind) {
    case MorExpr::Kind::Id: {
      NormalObj o = normalize(e.obj_args[0]);
      check_names_resolve(o, env, e.line, e.col);
      return {o, o};
    }
    case MorExpr::Kind::EvL: {
      NormalObj o = normalize(e.obj_args[0]);
      check_names_resolve(o, env, e.line, e.col);
      return {concat(dual_of(o), o), {}};
    }
    case MorExpr::Kind::CoevL: {
      NormalObj o = normalize(e.obj_args[0]);
      check_names_resolve(o, env, e.line, e.col);
      return {{}, concat(o, dual_of(o))};
    }
    case MorExpr::Kind::EvR: {
      NormalObj o = normalize(e.obj_args[0]);
      check_names_resolve(o, env, e.line, e.col);
      return {concat(o, dual_of(o)), {}};
    }
    case MorExpr::Kind::CoevR: {
      NormalObj o = normalize(e.obj_args[0]);
      check_names_resolve(o, env, e.line, e.col);
      return {{}, concat(dual_of(o), o)};
    }
    case MorExpr::Kind::Phi: {
      NormalObj o = normalize(e.obj_args[0]);
      check_names_resolve(o, env, e.line, e.col);
      return {o, dual_of(dual_of(o))};
    }
    case MorExpr::Kind::Gamma: {
      NormalObj v = normalize(e.obj_args[0]);
      NormalObj w = normalize(e.obj_args[1]);
      check_names_resolve(v, env, e.line, e.col);
      check_names_resolve(w, env, e.line, e.col);
      return {concat(dual_of(w), dual_of(v)), dual_of(concat(v, w))};
    }
    case MorExpr::Kind::Name: {
      auto it = env.morphisms.find(e.name);
      if (it == env.morphisms.end())
        throw TypeError(e.line, e.col, "a registered morphism name", e.name);
      return {it->second.dom, it->second.cod};
    }
    case MorExpr::Kind::Dual: {
      MorType inner = typecheck(e.children[0], env);
      return {dual_of(inner.cod), dual_of(inner.dom)};
    }
    case MorExpr::Kind::Compose: {
      MorType left = typecheck(e.children[0], env);
      MorType right = typecheck(e.children[1], env);
      if (!(right.cod == left.dom))
        throw TypeError(e.line, e.col, to_string(left.dom),
                        to_string(right.cod));
      return {right.dom, left.cod};
    }
    case MorExpr::Kind::Tensor: {
      MorType left = typecheck(e.children[0], env);
      MorType right = typecheck(e.children[1], env);
      return {concat(left.dom, right.dom), concat(left.cod, right.cod)};
    }
    case MorExpr::Kind::PtrR: {
      NormalObj w = normalize(e.obj_args[0]);
      check_names_resolve(w, env, e.line, e.col);
      MorType inner = typecheck(e.children[0], env);
      if (!ends_with(inner.dom, w))
        throw TypeError(e.line, e.col,
                        "domain ending in " + to_string(w),
                        to_string(inner.dom));
      if (!ends_with(inner.cod, w))
        throw TypeError(e.line, e.col,
                        "codomain ending in " + to_string(w),
                        to_string(inner.cod));
      return {drop_suffix(inner.dom, w.size()),
              drop_suffix(inner.cod, w.size())};
    }
    case MorExpr::Kind::PtrL: {
      NormalObj w = normalize(e.obj_args[0]);
      check_names_resolve(w, env, e.line, e.col);
      MorType inner = typecheck(e.children[0], env);
      if (!starts_with(inner.dom, w))
        throw TypeError(e.line, e.col,
                        "domain starting with " + to_string(w),
                        to_string(inner.dom));
      if (!starts_with(inner.cod, w))
        throw TypeError(e.line, e.col,
                        "codomain starting with " + to_string(w),
                        to_string(inner.cod));
      return {drop_prefix(inner.dom, w.size()),
              drop_prefix(inner.cod, w.size())};
    }
  }
  throw Error("unreachable");
}

ModulePtr module_of(const NormalObj& o, const Env& env, const HopfPtr& h) {
  ModulePtr acc;
  for (const auto& a : o) {
    ModulePtr factor;
    if (a.dual) {
      factor = dual(module_of(*a.dual, env, h));
    } else {
      auto it = env.modules.find(a.name);
      if (it == env.modules.end())
        throw TypeError(0, 0, "a registered object name", a.name);
      factor = it->second;
    }
    acc = acc ? tensor(acc, factor) : factor;
  }
  return acc ? acc : unit_module(h);
}

Morphism eval(const MorExpr& e, const Env& env, const HopfPtr& h) {
  auto obj = [&](const ObjExpr& oe) {
    return module_of(normalize(oe), env, h);
  };
  switch (e.kind) {
    case MorExpr::Kind::Id:
      return identity(obj(e.obj_args[0]));
    case MorExpr::Kind::EvL:
      return ev_l(obj(e.obj_args[0]));
    case MorExpr::Kind::CoevL:
      return coev_l(obj(e.obj_args[0]));
    case MorExpr::Kind::EvR:
      return ev_r(obj(e.obj_args[0]));
    case MorExpr::Kind::CoevR:
      return coev_r(obj(e.obj_args[0]));
    case MorExpr::Kind::Phi:
      return phi(obj(e.obj_args[0]));
    case MorExpr::Kind::Gamma:
      return gamma(obj(e.obj_args[0]), obj(e.obj_args[1]));
    case MorExpr::Kind::Name: {
      auto it = env.morphisms.find(e.name);
      if (it == env.morphisms.end())
        throw TypeError(e.line, e.col, "a registered morphism name", e.name);
      return it->second.mor;
    }
    case MorExpr::Kind::Dual:
      return dual_morphism(eval(e.children[0], env, h));
    case MorExpr::Kind::Compose: {
      Morphism left = eval(e.children[0], env, h);
      Morphism right = eval(e.children[1], env, h);
      return compose(left, right);
    }
    case MorExpr::Kind::Tensor: {
      Morphism left = eval(e.children[0], env, h);
      Morphism right = eval(e.children[1], env, h);
      return tensor_mor(left, right);
    }
    case MorExpr::Kind::PtrR: {
      MorType ty = typecheck(e, env);
      NormalObj w = normalize(e.obj_args[0]);
      Morphism inner = eval(e.children[0], env, h);
      return ptr_r(module_of(ty.dom, env, h), module_of(ty.cod, env, h),
                   module_of(w, env, h), inner);
    }
    case MorExpr::Kind::PtrL: {
      MorType ty = typecheck(e, env);
      NormalObj w = normalize(e.obj_args[0]);
      Morphism inner = eval(e.children[0], env, h);
      return ptr_l(module_of(ty.dom, env, h), module_of(ty.cod, env, h),
                   module_of(w, env, h), inner);
    }
  }
  throw Error("unreachable");
}

Morphism eval_str(const std::string& src, const Env& env, const HopfPtr& h) {
  MorExpr e = parse_morphism(src);
  typecheck(e, env);  // reject ill-typed expressions before evaluating
  return eval(e, env, h);
}

}  // namespace dsl
}  // namespace mtrace
