// Copyright 2026 The combs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "combs/term.hpp"

#include <cctype>
#include <numeric>
#include <optional>

#include "combs/errors.hpp"

namespace combs {

namespace {

std::shared_ptr<const Term::Node> box(Term::Node n) {
  return std::make_shared<const Term::Node>(std::move(n));
}

}  // namespace

#define COMBS_MAKE(expr) Term(box(Term::Node(expr)))

Term Term::generator(std::string name) {
  return COMBS_MAKE(term::Generator{std::move(name)});
}
Term Term::identity(ObjectWord w) {
  return COMBS_MAKE(term::Identity{std::move(w)});
}
Term Term::symmetry(ObjectWord a, ObjectWord b) {
  return COMBS_MAKE((term::Symmetry{std::move(a), std::move(b)}));
}
Term Term::compose(Term first, Term second) {
  return COMBS_MAKE((term::Compose{std::move(first), std::move(second)}));
}
Term Term::tensor(Term left, Term right) {
  return COMBS_MAKE((term::Tensor{std::move(left), std::move(right)}));
}
Term Term::literal(ObjectWord dom, ObjectWord cod, nlohmann::json data) {
  return COMBS_MAKE(
      (term::Literal{std::move(dom), std::move(cod), std::move(data)}));
}
Term Term::dagger(Term inner) {
  return COMBS_MAKE(term::Dagger{std::move(inner)});
}
Term Term::cup(ObjectWord w) { return COMBS_MAKE(term::Cup{std::move(w)}); }
Term Term::cap(ObjectWord w) { return COMBS_MAKE(term::Cap{std::move(w)}); }
Term Term::copy(ObjectWord w) { return COMBS_MAKE(term::Copy{std::move(w)}); }
Term Term::discard(ObjectWord w) {
  return COMBS_MAKE(term::Discard{std::move(w)});
}

#undef COMBS_MAKE

// ---------------------------------------------------------------------------
// Printing

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void print(const Term& t, std::string& out, int context);

// context: 0 = sequence, 1 = tensor operand
void print(const Term& t, std::string& out, int context) {
  std::visit(
      overloaded{
          [&](const term::Generator& g) { out += g.name; },
          [&](const term::Identity& i) { out += "id(" + i.object.str() + ")"; },
          [&](const term::Symmetry& s) {
            out += "sym(" + s.left.str() + ", " + s.right.str() + ")";
          },
          [&](const term::Compose& c) {
            if (context == 1) out += '(';
            print(c.first, out, 0);
            out += " ; ";
            print(c.second, out, 0);
            if (context == 1) out += ')';
          },
          [&](const term::Tensor& p) {
            print(p.left, out, 1);
            out += " * ";
            print(p.right, out, 1);
          },
          [&](const term::Literal& l) {
            out += "lit(" + l.dom.str() + " -> " + l.cod.str() + ")";
            out += l.data.dump();
          },
          [&](const term::Dagger& d) {
            out += "dag(";
            print(d.inner, out, 0);
            out += ')';
          },
          [&](const term::Cup& c) { out += "cup(" + c.object.str() + ")"; },
          [&](const term::Cap& c) { out += "cap(" + c.object.str() + ")"; },
          [&](const term::Copy& c) { out += "copy(" + c.object.str() + ")"; },
          [&](const term::Discard& d) {
            out += "del(" + d.object.str() + ")";
          },
      },
      t.node());
}

}  // namespace

std::string Term::str() const {
  std::string out;
  print(*this, out, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Term parse_all() {
    Term t = sequence();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError,
         what + " at column " + std::to_string(pos_ + 1) + " in '" +
             std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  // '!' is admitted so that the conventional discard/effect name parses.
  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '!';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '\'';
  }

  std::string identifier() {
    skip_ws();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) error("expected a name");
    std::size_t start = pos_++;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  // Reads a word up to (not including) one of the stop characters.
  ObjectWord word(std::string_view stops) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && stops.find(s_[pos_]) == std::string_view::npos) {
      if (s_[pos_] == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>')
        break;
      ++pos_;
    }
    return ObjectWord::parse(s_.substr(start, pos_ - start));
  }

  Term sequence() {
    Term t = product();
    while (accept(';')) t = Term::compose(t, product());
    return t;
  }

  Term product() {
    Term t = atom();
    while (accept('*')) t = Term::tensor(t, atom());
    return t;
  }

  nlohmann::json json_block() {
    skip_ws();
    if (pos_ >= s_.size() || (s_[pos_] != '[' && s_[pos_] != '{'))
      error("expected a JSON literal");
    std::size_t start = pos_;
    int depth = 0;
    bool in_string = false;
    for (; pos_ < s_.size(); ++pos_) {
      char c = s_[pos_];
      if (in_string) {
        if (c == '\\') ++pos_;
        else if (c == '"') in_string = false;
        continue;
      }
      if (c == '"') in_string = true;
      else if (c == '[' || c == '{') ++depth;
      else if (c == ']' || c == '}') {
        if (--depth == 0) {
          ++pos_;
          break;
        }
      }
    }
    if (depth != 0) error("unbalanced JSON literal");
    try {
      return nlohmann::json::parse(s_.substr(start, pos_ - start));
    } catch (const nlohmann::json::exception& e) {
      error(std::string("bad JSON literal: ") + e.what());
    }
  }

  Term atom() {
    if (accept('(')) {
      Term t = sequence();
      expect(')');
      return t;
    }
    std::string name = identifier();
    auto word_arg = [&]() {
      expect('(');
      ObjectWord w = word(")");
      expect(')');
      return w;
    };
    if (name == "id") return Term::identity(word_arg());
    if (name == "cup") return Term::cup(word_arg());
    if (name == "cap") return Term::cap(word_arg());
    if (name == "copy") return Term::copy(word_arg());
    if (name == "del") return Term::discard(word_arg());
    if (name == "sym") {
      expect('(');
      ObjectWord a = word(",");
      expect(',');
      ObjectWord b = word(")");
      expect(')');
      return Term::symmetry(a, b);
    }
    if (name == "dag") {
      expect('(');
      Term t = sequence();
      expect(')');
      return Term::dagger(t);
    }
    if (name == "lit") {
      expect('(');
      ObjectWord dom = word(")");
      skip_ws();
      if (s_.substr(pos_, 2) != "->") error("expected '->'");
      pos_ += 2;
      ObjectWord cod = word(")");
      expect(')');
      return Term::literal(dom, cod, json_block());
    }
    return Term::generator(name);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Term Term::parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Typing

std::pair<ObjectWord, ObjectWord> infer_type(const Term& t,
                                             const Signature& sig) {
  auto n = [&](const ObjectWord& w) { return sig.normalize(w); };
  return std::visit(
      overloaded{
          [&](const term::Generator& g) -> std::pair<ObjectWord, ObjectWord> {
            auto it = sig.generators.find(g.name);
            if (it == sig.generators.end())
              fail(ErrorKind::UnknownGenerator, g.name);
            return {n(it->second.first), n(it->second.second)};
          },
          [&](const term::Identity& i) -> std::pair<ObjectWord, ObjectWord> {
            return {n(i.object), n(i.object)};
          },
          [&](const term::Symmetry& s) -> std::pair<ObjectWord, ObjectWord> {
            return {n(s.left * s.right), n(s.right * s.left)};
          },
          [&](const term::Compose& c) -> std::pair<ObjectWord, ObjectWord> {
            auto [d1, c1] = infer_type(c.first, sig);
            auto [d2, c2] = infer_type(c.second, sig);
            if (c1 != d2)
              fail(ErrorKind::TypeMismatch,
                   "cannot compose " + c.first.str() + " : " + d1.str() +
                       " -> " + c1.str() + " with " + c.second.str() + " : " +
                       d2.str() + " -> " + c2.str());
            return {d1, c2};
          },
          [&](const term::Tensor& p) -> std::pair<ObjectWord, ObjectWord> {
            auto [d1, c1] = infer_type(p.left, sig);
            auto [d2, c2] = infer_type(p.right, sig);
            return {n(d1 * d2), n(c1 * c2)};
          },
          [&](const term::Literal& l) -> std::pair<ObjectWord, ObjectWord> {
            return {n(l.dom), n(l.cod)};
          },
          [&](const term::Dagger& d) -> std::pair<ObjectWord, ObjectWord> {
            auto [dm, cd] = infer_type(d.inner, sig);
            return {cd, dm};
          },
          [&](const term::Cup& c) -> std::pair<ObjectWord, ObjectWord> {
            return {ObjectWord{}, n(c.object.dual() * c.object)};
          },
          [&](const term::Cap& c) -> std::pair<ObjectWord, ObjectWord> {
            return {n(c.object * c.object.dual()), ObjectWord{}};
          },
          [&](const term::Copy& c) -> std::pair<ObjectWord, ObjectWord> {
            return {n(c.object), n(c.object * c.object)};
          },
          [&](const term::Discard& d) -> std::pair<ObjectWord, ObjectWord> {
            return {n(d.object), ObjectWord{}};
          },
      },
      t.node());
}

Term permutation_term(const std::vector<ObjectWord>& blocks,
                      const std::vector<std::size_t>& order) {
  std::vector<std::size_t> cur(blocks.size());
  std::iota(cur.begin(), cur.end(), 0);
  auto word_of = [&](std::size_t from, std::size_t to) {
    ObjectWord w;
    for (std::size_t i = from; i < to; ++i) w = w * blocks[cur[i]];
    return w;
  };
  ObjectWord all = word_of(0, cur.size());
  std::optional<Term> acc;
  for (std::size_t p = 0; p < order.size(); ++p) {
    std::size_t q = p;
    while (cur[q] != order[p]) ++q;
    for (; q > p; --q) {
      Term swap = Term::identity(word_of(0, q - 1)) *
                  Term::symmetry(blocks[cur[q - 1]], blocks[cur[q]]) *
                  Term::identity(word_of(q + 1, cur.size()));
      acc = acc ? Term::compose(*acc, swap) : swap;
      std::swap(cur[q - 1], cur[q]);
    }
  }
  return acc ? *acc : Term::identity(all);
}

}  // namespace combs
