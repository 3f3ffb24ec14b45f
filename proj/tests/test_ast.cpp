#include <doctest.h>

#include "deolog/asp/ast.hpp"

using namespace deolog::asp;

TEST_CASE("terms print and compare structurally") {
  Term c = cst("mail");
  Term i = num(3);
  Term v = var("X");
  Term comp = Term::compound("eat", {cst("blue_ghost")});
  CHECK(c.text() == "mail");
  CHECK(i.text() == "3");
  CHECK(v.text() == "X");
  CHECK(comp.text() == "eat(blue_ghost)");
  CHECK(c.is_ground());
  CHECK(!v.is_ground());
  CHECK(comp.is_ground());
  CHECK(!Term::compound("eat", {var("G")}).is_ground());
  CHECK(c == cst("mail"));
  CHECK(c != cst("burn"));
}

TEST_CASE("integer terms must be non-negative") {
  CHECK_THROWS_AS(num(-1), Error);
}

TEST_CASE("a literal and its strong negation are distinct") {
  Literal a = lit("o", {cst("mail")});
  Literal na = neg("o", {cst("mail")});
  CHECK(a != na);
  CHECK(a.negated() == na);
  CHECK(na.text() == "-o(mail)");

  Interpretation both{a, na};
  CHECK(!is_consistent(both));
  CHECK(is_consistent(Interpretation{a}));
}

TEST_CASE("cost vectors compare lexicographically, high levels first") {
  CostVector a, b;
  a.add(1, 5);
  b.add(2, 1);
  CHECK(a < b);  // any level-2 weight beats any level-1-only cost

  CostVector c, d;
  c.add(2, 1);
  c.add(1, 1);
  d.add(2, 1);
  d.add(1, 2);
  CHECK(c < d);

  CostVector e;
  e.add(3, 0);  // zero weights never register
  CHECK(e == CostVector{});
  CHECK(e.text() == "<>");

  CostVector f;
  f.add(1, 1);
  f.add(2, 2);
  CHECK(f.text() == "<2:2, 1:1>");
  CHECK(f.at(2) == 2);
  CHECK(f.at(7) == 0);
}

TEST_CASE("safety detects unbound variables") {
  // o(X) :- act(X). is safe
  Rule r1;
  r1.head.push_back(lit("o", {var("X")}));
  r1.body.push_back(lit("act", {var("X")}));
  CHECK(!find_unsafe_variable(r1.head, r1.body).has_value());

  // o(X). is unsafe
  Rule r2;
  r2.head.push_back(lit("o", {var("X")}));
  CHECK(find_unsafe_variable(r2.head, r2.body) == "X");

  // p :- not q(X). is unsafe
  Rule r3;
  r3.head.push_back(lit("p"));
  r3.body.push_back(NafLiteral{lit("q", {var("X")})});
  CHECK(find_unsafe_variable(r3.head, r3.body) == "X");

  // assignment builtins bind transitively: p(E) :- q(C, A), E = C - A.
  Rule r4;
  r4.head.push_back(lit("p", {var("E")}));
  r4.body.push_back(lit("q", {var("C"), var("A")}));
  Builtin b;
  b.lhs = ArithExpr{var("E"), ArithOp::None, {}};
  b.op = CmpOp::Eq;
  b.rhs = ArithExpr{var("C"), ArithOp::Sub, var("A")};
  r4.body.push_back(b);
  CHECK(!find_unsafe_variable(r4.head, r4.body).has_value());

  // comparison builtins bind nothing: p :- q(C), E <= C.
  Rule r5;
  r5.head.push_back(lit("p"));
  r5.body.push_back(lit("q", {var("C")}));
  Builtin le;
  le.lhs = ArithExpr{var("E"), ArithOp::None, {}};
  le.op = CmpOp::Le;
  le.rhs = ArithExpr{var("C"), ArithOp::None, {}};
  r5.body.push_back(le);
  CHECK(find_unsafe_variable(r5.head, r5.body) == "E");
}
