// Copyright 2026 The lorenzen Authors
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

#include <cctype>

#include "lorenzen/lgroup.hpp"

namespace lorenzen {

namespace {

LatticeTerm make_binary(LatticeTerm::Op op, LatticeTerm a, LatticeTerm b) {
  if (a.rank() != b.rank()) {
    throw DimensionError("term operands of rank " + std::to_string(a.rank()) + " and " +
                         std::to_string(b.rank()));
  }
  switch (op) {
    case LatticeTerm::Op::Add:
      return LatticeTerm::add(std::move(a), std::move(b));
    case LatticeTerm::Op::Meet:
      return LatticeTerm::meet(std::move(a), std::move(b));
    default:
      return LatticeTerm::join(std::move(a), std::move(b));
  }
}

class TermParser {
 public:
  explicit TermParser(const std::string& text) : text_(text) {}

  LatticeTerm parse() {
    LatticeTerm t = term();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("term: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    std::string s = text_.substr(start, pos_ - start);
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an operator");
    return text_.substr(start, pos_ - start);
  }

  LatticeTerm term() {
    if (peek('[')) {
      ++pos_;
      std::vector<Integer> coords{integer()};
      while (peek(',')) {
        ++pos_;
        coords.push_back(integer());
      }
      expect(']');
      return LatticeTerm::leaf(GroupElement(std::move(coords)));
    }
    if (peek('(')) {
      ++pos_;
      const std::string op = word();
      std::vector<LatticeTerm> args;
      while (!peek(')')) {
        if (pos_ >= text_.size()) fail("unclosed '('");
        args.push_back(term());
      }
      ++pos_;
      if (op == "neg") {
        if (args.size() != 1) fail("neg takes one argument");
        return LatticeTerm::neg(std::move(args[0]));
      }
      LatticeTerm::Op kind;
      if (op == "add") {
        kind = LatticeTerm::Op::Add;
      } else if (op == "meet") {
        kind = LatticeTerm::Op::Meet;
      } else if (op == "join") {
        kind = LatticeTerm::Op::Join;
      } else {
        fail("unknown operator '" + op + "'");
      }
      if (args.size() < 2) fail(op + " takes at least two arguments");
      LatticeTerm acc = args[0];
      for (std::size_t i = 1; i < args.size(); ++i) acc = make_binary(kind, std::move(acc), args[i]);
      return acc;
    }
    return LatticeTerm::leaf(GroupElement(std::vector<Integer>{integer()}));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

LatticeTerm LatticeTerm::leaf(GroupElement g) {
  if (g.rank() == 0) throw ArgumentError("term leaves need rank >= 1");
  return LatticeTerm(std::make_shared<const Node>(Node{Op::Leaf, std::move(g), {}}));
}

LatticeTerm LatticeTerm::add(LatticeTerm a, LatticeTerm b) {
  if (a.rank() != b.rank()) throw DimensionError("add of terms with different ranks");
  return LatticeTerm(std::make_shared<const Node>(Node{Op::Add, {}, {std::move(a), std::move(b)}}));
}

LatticeTerm LatticeTerm::neg(LatticeTerm a) {
  return LatticeTerm(std::make_shared<const Node>(Node{Op::Neg, {}, {std::move(a)}}));
}

LatticeTerm LatticeTerm::meet(LatticeTerm a, LatticeTerm b) {
  if (a.rank() != b.rank()) throw DimensionError("meet of terms with different ranks");
  return LatticeTerm(std::make_shared<const Node>(Node{Op::Meet, {}, {std::move(a), std::move(b)}}));
}

LatticeTerm LatticeTerm::join(LatticeTerm a, LatticeTerm b) {
  if (a.rank() != b.rank()) throw DimensionError("join of terms with different ranks");
  return LatticeTerm(std::make_shared<const Node>(Node{Op::Join, {}, {std::move(a), std::move(b)}}));
}

LatticeTerm LatticeTerm::parse(const std::string& text) { return TermParser(text).parse(); }

const GroupElement& LatticeTerm::value() const {
  if (node_->op != Op::Leaf) throw ArgumentError("only leaves carry a value");
  return node_->value;
}

const LatticeTerm& LatticeTerm::left() const {
  if (node_->children.empty()) throw ArgumentError("a leaf has no operands");
  return node_->children[0];
}

const LatticeTerm& LatticeTerm::right() const {
  if (node_->children.size() < 2) throw ArgumentError("term has no second operand");
  return node_->children[1];
}

std::size_t LatticeTerm::rank() const {
  return node_->op == Op::Leaf ? node_->value.rank() : node_->children[0].rank();
}

std::string LatticeTerm::to_string() const {
  switch (node_->op) {
    case Op::Leaf: {
      const GroupElement& v = node_->value;
      if (v.rank() == 1) return v[0].get_str();
      std::string s = "[";
      for (std::size_t i = 0; i < v.rank(); ++i) s += (i ? "," : "") + v[i].get_str();
      return s + "]";
    }
    case Op::Add:
      return "(add " + left().to_string() + " " + right().to_string() + ")";
    case Op::Neg:
      return "(neg " + left().to_string() + ")";
    case Op::Meet:
      return "(meet " + left().to_string() + " " + right().to_string() + ")";
    case Op::Join:
      return "(join " + left().to_string() + " " + right().to_string() + ")";
  }
  return "?";
}

}  // namespace lorenzen
