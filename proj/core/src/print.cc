// Copyright 2026 The inlc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "inlc/print.h"

#include <cctype>

namespace inlc {

using json = nlohmann::json;

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "latex") return Format::kLatex;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// INL

namespace {

using K = Formula::Kind;

struct Glyphs {
  const char* top;
  const char* bot;
  const char* neg;
  const char* conj;
  const char* disj;
  const char* implies;
  const char* iff;
};

constexpr Glyphs kTextGlyphs{"top", "bot", "~", " & ", " | ", " -> ", " <-> "};
constexpr Glyphs kLatexGlyphs{"\\top", "\\bot", "\\neg ", " \\land ", " \\lor ",
                              " \\to ", " \\leftrightarrow "};

// Binding strength; higher binds tighter.
int precedence(const Formula& f) {
  switch (f.kind()) {
    case K::kIff: return 1;
    case K::kImplies: return 2;
    case K::kOr: return 3;
    case K::kAnd: return 4;
    default: return 5;
  }
}

void render_inl(const Formula& f, int need, const Glyphs& g, bool latex,
                std::string& out) {
  const int prec = precedence(f);
  const bool wrap = prec < need;
  if (wrap) out += latex ? "\\left(" : "(";
  switch (f.kind()) {
    case K::kVar: out += f.name(); break;
    case K::kTop: out += g.top; break;
    case K::kBot: out += g.bot; break;
    case K::kNot:
      out += g.neg;
      render_inl(f.arg(), 5, g, latex, out);
      break;
    case K::kAnd:
    case K::kOr:
    case K::kIff: {
      // Left associative.
      const char* op = f.is(K::kAnd) ? g.conj : f.is(K::kOr) ? g.disj : g.iff;
      render_inl(f.lhs(), prec, g, latex, out);
      out += op;
      render_inl(f.rhs(), prec + 1, g, latex, out);
      break;
    }
    case K::kImplies:
      render_inl(f.lhs(), prec + 1, g, latex, out);
      out += g.implies;
      render_inl(f.rhs(), prec, g, latex, out);
      break;
    case K::kBox: {
      out += latex ? "\\Box_{" + std::to_string(f.arity()) + "}\\left(" : "Box(";
      bool first = true;
      for (const auto& a : f.instantial()) {
        if (!first) out += ", ";
        first = false;
        render_inl(a, 1, g, latex, out);
      }
      out += "; ";
      render_inl(f.universal(), 1, g, latex, out);
      out += latex ? "\\right)" : ")";
      break;
    }
  }
  if (wrap) out += latex ? "\\right)" : ")";
}

}  // namespace

json inl_to_json(const Formula& f) {
  switch (f.kind()) {
    case K::kVar: return {{"op", "var"}, {"name", f.name()}};
    case K::kTop: return {{"op", "top"}};
    case K::kBot: return {{"op", "bot"}};
    case K::kNot: return {{"op", "not"}, {"arg", inl_to_json(f.arg())}};
    case K::kAnd:
    case K::kOr:
    case K::kImplies:
    case K::kIff: {
      const char* op = f.is(K::kAnd) ? "and"
                       : f.is(K::kOr) ? "or"
                       : f.is(K::kImplies) ? "implies"
                                           : "iff";
      return {{"op", op}, {"lhs", inl_to_json(f.lhs())}, {"rhs", inl_to_json(f.rhs())}};
    }
    case K::kBox: {
      json inst = json::array();
      for (const auto& a : f.instantial()) inst.push_back(inl_to_json(a));
      return {{"op", "box"}, {"inst", inst}, {"univ", inl_to_json(f.universal())}};
    }
  }
  return nullptr;
}

std::string print_inl(const Formula& phi, Format format) {
  if (format == Format::kJson) return inl_to_json(phi).dump();
  std::string out;
  const bool latex = format == Format::kLatex;
  render_inl(phi, 0, latex ? kLatexGlyphs : kTextGlyphs, latex, out);
  return out;
}

// ---------------------------------------------------------------------------
// First-order

namespace {

using FK = FoFormula::Kind;

std::string predicate_symbol(const std::string& p) {
  std::string s = p;
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

// Atoms, negations and quantifiers delimit themselves.
bool fo_self_delimited(const FoFormula& f) {
  switch (f.kind()) {
    case FK::kAnd:
    case FK::kOr:
    case FK::kImplies:
      return false;
    default:
      return true;
  }
}

bool fo_atomic(const FoFormula& f) {
  switch (f.kind()) {
    case FK::kPred:
    case FK::kRelNi:
    case FK::kRelN:
    case FK::kTrue:
    case FK::kFalse:
      return true;
    default:
      return false;
  }
}

void render_fo(const FoFormula& f, bool latex, std::string& out);

void render_fo_child(const FoFormula& f, bool latex, std::string& out) {
  if (fo_self_delimited(f)) {
    render_fo(f, latex, out);
    return;
  }
  out += latex ? "\\left(" : "(";
  render_fo(f, latex, out);
  out += latex ? "\\right)" : ")";
}

void render_fo(const FoFormula& f, bool latex, std::string& out) {
  auto v = [&](std::size_t i) { return f.vars()[i].name; };
  switch (f.kind()) {
    case FK::kPred:
      out += predicate_symbol(f.name()) + "(" + v(0) + ")";
      return;
    case FK::kRelNi:
      out += (latex ? "R_{\\ni}(" : "R_ni(") + v(0) + "," + v(1) + ")";
      return;
    case FK::kRelN:
      out += (latex ? "R_{N}(" : "R_N(") + v(0) + "," + v(1) + ")";
      return;
    case FK::kEq:
      out += v(0) + " = " + v(1);
      return;
    case FK::kTrue:
      out += latex ? "\\top" : "true";
      return;
    case FK::kFalse:
      out += latex ? "\\bot" : "false";
      return;
    case FK::kNot:
      out += latex ? "\\neg " : "~";
      if (fo_atomic(f.arg()) || f.arg().is(FK::kNot)) {
        render_fo(f.arg(), latex, out);
      } else {
        out += latex ? "\\left(" : "(";
        render_fo(f.arg(), latex, out);
        out += latex ? "\\right)" : ")";
      }
      return;
    case FK::kAnd:
    case FK::kOr: {
      const char* op = f.is(FK::kAnd) ? (latex ? " \\land " : " & ")
                                      : (latex ? " \\lor " : " | ");
      bool first = true;
      for (const auto& k : f.children()) {
        if (!first) out += op;
        first = false;
        render_fo_child(k, latex, out);
      }
      return;
    }
    case FK::kImplies:
      render_fo_child(f.lhs(), latex, out);
      out += latex ? " \\to " : " -> ";
      render_fo_child(f.rhs(), latex, out);
      return;
    case FK::kForallWorld:
    case FK::kForallSubset:
    case FK::kExistsWorld:
    case FK::kExistsSubset:
      if (latex) {
        out += f.is_universal() ? "\\forall " : "\\exists ";
        out += f.bound().name + "\\,\\left(";
      } else {
        out += f.is_universal() ? "forall " : "exists ";
        out += f.bound().name + " (";
      }
      render_fo(f.body(), latex, out);
      out += latex ? "\\right)" : ")";
      return;
  }
}

}  // namespace

json fo_to_json(const FoFormula& f) {
  auto v = [&](std::size_t i) { return f.vars()[i].name; };
  switch (f.kind()) {
    case FK::kPred: return {{"op", "pred"}, {"name", f.name()}, {"arg", v(0)}};
    case FK::kRelNi: return {{"op", "rel_ni"}, {"set", v(0)}, {"world", v(1)}};
    case FK::kRelN: return {{"op", "rel_n"}, {"world", v(0)}, {"set", v(1)}};
    case FK::kEq: return {{"op", "eq"}, {"lhs", v(0)}, {"rhs", v(1)}};
    case FK::kTrue: return {{"op", "true"}};
    case FK::kFalse: return {{"op", "false"}};
    case FK::kNot: return {{"op", "not"}, {"arg", fo_to_json(f.arg())}};
    case FK::kAnd:
    case FK::kOr: {
      json args = json::array();
      for (const auto& k : f.children()) args.push_back(fo_to_json(k));
      return {{"op", f.is(FK::kAnd) ? "and" : "or"}, {"args", args}};
    }
    case FK::kImplies:
      return {{"op", "implies"}, {"lhs", fo_to_json(f.lhs())}, {"rhs", fo_to_json(f.rhs())}};
    case FK::kForallWorld:
    case FK::kExistsWorld:
    case FK::kForallSubset:
    case FK::kExistsSubset: {
      const char* op = f.is(FK::kForallWorld)    ? "forall_w"
                       : f.is(FK::kExistsWorld)  ? "exists_w"
                       : f.is(FK::kForallSubset) ? "forall_s"
                                                 : "exists_s";
      return {{"op", op}, {"var", f.bound().name}, {"body", fo_to_json(f.body())}};
    }
  }
  return nullptr;
}

std::string print_fo(const FoFormula& alpha, Format format) {
  if (format == Format::kJson) return fo_to_json(alpha).dump();
  std::string out;
  render_fo(alpha, format == Format::kLatex, out);
  return out;
}

// ---------------------------------------------------------------------------
// Bimodal

namespace {

using BK = BimodalFormula::Kind;

const char* modality(BK k, bool latex) {
  switch (k) {
    case BK::kDiamondN: return latex ? "\\Diamond_{N}" : "<>N";
    case BK::kBoxN: return latex ? "\\Box_{N}" : "[]N";
    case BK::kDiamondNi: return latex ? "\\Diamond_{\\ni}" : "<>ni";
    case BK::kBoxNi: return latex ? "\\Box_{\\ni}" : "[]ni";
    default: return "";
  }
}

bool bimodal_unary(const BimodalFormula& f) {
  switch (f.kind()) {
    case BK::kAnd:
    case BK::kOr:
    case BK::kImplies:
      return false;
    default:
      return true;
  }
}

void render_bimodal(const BimodalFormula& f, bool latex, std::string& out);

void render_bimodal_child(const BimodalFormula& f, bool latex, std::string& out) {
  if (bimodal_unary(f)) {
    render_bimodal(f, latex, out);
    return;
  }
  out += latex ? "\\left(" : "(";
  render_bimodal(f, latex, out);
  out += latex ? "\\right)" : ")";
}

void render_bimodal(const BimodalFormula& f, bool latex, std::string& out) {
  switch (f.kind()) {
    case BK::kVar: out += f.name(); return;
    case BK::kTop: out += latex ? "\\top" : "top"; return;
    case BK::kBot: out += latex ? "\\bot" : "bot"; return;
    case BK::kNot:
      out += latex ? "\\neg " : "~";
      render_bimodal_child(f.arg(), latex, out);
      return;
    case BK::kAnd:
    case BK::kOr:
    case BK::kImplies: {
      const char* op = f.is(BK::kAnd)  ? (latex ? " \\land " : " & ")
                       : f.is(BK::kOr) ? (latex ? " \\lor " : " | ")
                                       : (latex ? " \\to " : " -> ");
      // & and | are associative; a left operand with the same connective
      // needs no parentheses.
      if (!f.is(BK::kImplies) && f.lhs().is(f.kind())) {
        render_bimodal(f.lhs(), latex, out);
      } else {
        render_bimodal_child(f.lhs(), latex, out);
      }
      out += op;
      render_bimodal_child(f.rhs(), latex, out);
      return;
    }
    default: {
      out += modality(f.kind(), latex);
      // A modality applied to a compound argument always gets parentheses;
      // atoms and nested unary operators follow after a space.
      if (bimodal_unary(f.arg())) {
        out += " ";
        render_bimodal(f.arg(), latex, out);
      } else {
        render_bimodal_child(f.arg(), latex, out);
      }
      return;
    }
  }
}

}  // namespace

json bimodal_to_json(const BimodalFormula& f) {
  json j;
  switch (f.kind()) {
    case BK::kVar: j = {{"op", "var"}, {"name", f.name()}}; break;
    case BK::kTop: j = {{"op", "top"}}; break;
    case BK::kBot: j = {{"op", "bot"}}; break;
    case BK::kNot: j = {{"op", "not"}, {"arg", bimodal_to_json(f.arg())}}; break;
    case BK::kAnd:
    case BK::kOr:
    case BK::kImplies: {
      const char* op = f.is(BK::kAnd) ? "and" : f.is(BK::kOr) ? "or" : "implies";
      j = {{"op", op}, {"lhs", bimodal_to_json(f.lhs())}, {"rhs", bimodal_to_json(f.rhs())}};
      break;
    }
    case BK::kDiamondN: j = {{"op", "dia_n"}, {"arg", bimodal_to_json(f.arg())}}; break;
    case BK::kBoxN: j = {{"op", "box_n"}, {"arg", bimodal_to_json(f.arg())}}; break;
    case BK::kDiamondNi: j = {{"op", "dia_ni"}, {"arg", bimodal_to_json(f.arg())}}; break;
    case BK::kBoxNi: j = {{"op", "box_ni"}, {"arg", bimodal_to_json(f.arg())}}; break;
  }
  j["sort"] = f.sort() == Sort::kWorld ? "world" : "subset";
  return j;
}

std::string print_bimodal(const BimodalFormula& chi, Format format) {
  if (format == Format::kJson) return bimodal_to_json(chi).dump();
  std::string out;
  render_bimodal(chi, format == Format::kLatex, out);
  return out;
}

// ---------------------------------------------------------------------------
// Classifier output

json decomposition_to_json(const Decomposition& d) {
  json j{{"role", to_string(d.role)}, {"formula", print_inl(d.formula)}};
  if (!d.children.empty()) {
    json kids = json::array();
    for (const auto& c : d.children) kids.push_back(decomposition_to_json(c));
    j["children"] = kids;
  }
  return j;
}

json classification_to_json(const SahlqvistClass& c) {
  json j{{"verdict", to_string(c.verdict)}};
  if (c.antecedent) j["antecedent"] = print_inl(*c.antecedent);
  if (c.consequent) j["consequent"] = print_inl(*c.consequent);
  if (c.decomposition) j["decomposition"] = decomposition_to_json(*c.decomposition);
  if (c.verdict == Tier::kNotSahlqvist) j["reason"] = c.reason;
  return j;
}

}  // namespace inlc
