#include <doctest.h>

#include "deolog/asp/ground.hpp"
#include "deolog/asp/parser.hpp"
#include "support/oracles.hpp"

using namespace deolog;
using namespace deolog::asp;

namespace {
Program parsed(const std::string& text) {
  ParseResult r = parse(text);
  REQUIRE(r.ok());
  return r.program;
}
}  // namespace

TEST_CASE("grounding a ground program returns it unchanged") {
  Program p = parsed("act(mail).\n:- o(a), f(a).\n:~ -o(mail). [1:2]");
  Program g = ground(p);
  CHECK(g == p);
}

TEST_CASE("variables instantiate against derivable atoms only") {
  Program p = parsed("o(X) v -o(X) :- act(X).\nact(mail).");
  Program g = ground(p);
  // One instance for mail plus the fact; no spurious integer instances.
  REQUIRE(g.rules.size() == 2);
  CHECK(g.rules[0].text() == "o(mail) v -o(mail) :- act(mail).");
  CHECK(g.rules[1].text() == "act(mail).");
}

TEST_CASE("derivable closure feeds later rules") {
  Program p = parsed(
      "b(X) :- a(X).\n"
      "c(X) :- b(X).\n"
      "a(k).");
  Program g = ground(p);
  CHECK(g.rules.size() == 3);
  Program expected = parsed("b(k) :- a(k).\nc(k) :- b(k).\na(k).");
  CHECK(g.rules[0] == expected.rules[0]);
  CHECK(g.rules[1] == expected.rules[1]);
}

TEST_CASE("compound terms instantiate") {
  Program p = parsed("o(X) v -o(X) :- act(X).\nact(eat(blue_ghost)).");
  Program g = ground(p);
  CHECK(g.rules[0].text() ==
        "o(eat(blue_ghost)) v -o(eat(blue_ghost)) :- act(eat(blue_ghost)).");
}

TEST_CASE("builtins evaluate: false instances drop, true builtins vanish") {
  Program p = parsed(
      "p(X) :- q(X), X<=2.\n"
      "q(1). q(2). q(5).");
  Program g = ground(p);
  std::string text = print(g);
  CHECK(text.find("p(1) :- q(1).") != std::string::npos);
  CHECK(text.find("p(2) :- q(2).") != std::string::npos);
  CHECK(text.find("p(5)") == std::string::npos);
  CHECK(text.find("<=") == std::string::npos);
}

TEST_CASE("assignment builtins bind functionally") {
  Program p = parsed(
      "d(E) :- q(C, A), E=C-A.\n"
      "q(12, 10).");
  Program g = ground(p);
  CHECK(print(g).find("d(2) :- q(12,10).") != std::string::npos);
}

TEST_CASE("arithmetic outside 0..maxint fails the instance") {
  Program p = parsed(
      "d(E) :- q(C, A), E=C-A.\n"
      "q(10, 12).");  // would be negative
  Program g = ground(p);
  CHECK(print(g).find("d(") == std::string::npos);

  GroundOptions small;
  small.maxint = 10;
  Program p2 = parsed(
      "d(E) :- q(C, A), E=C+A.\n"
      "q(8, 8).");  // 16 > maxint
  Program g2 = ground(p2, small);
  CHECK(print(g2).find("d(") == std::string::npos);
}

TEST_CASE("the pacman case-1 constraint grounds to exactly the live instance") {
  // With the two position facts, only E=2, G=0 survives the builtins.
  Program p = parsed(
      ":~ pacman(A,B), blueGhost(C,D,1), E=C-A, E<=2, G=B-D, G<=1, -f(east). "
      "[1:4]\n"
      "pacman(10,10).\n"
      "blueGhost(12,10,1).\n"
      "f(east) v -f(east).");
  GroundOptions opt;
  opt.maxint = 40;
  Program g = ground(p, opt);
  REQUIRE(g.weak_constraints.size() == 1);
  CHECK(g.weak_constraints[0].text() ==
        ":~ pacman(10,10), blueGhost(12,10,1), -f(east). [1:4]");

  // Brute-force substitution oracle: A,B,C,D match the facts in every
  // possible way, E and G range over the whole integer universe.
  std::vector<Term> universe;
  for (long long i = 0; i <= opt.maxint; ++i) universe.push_back(num(i));
  std::vector<Literal> facts = {lit("pacman", {num(10), num(10)}),
                                lit("blueGhost", {num(12), num(10), num(1)}),
                                neg("f", {cst("east")})};
  Program pattern = parsed(
      ":~ pacman(A,B), blueGhost(C,D,1), E=C-A, E<=2, G=B-D, G<=1, -f(east). "
      "[1:4]");
  auto subs = test::oracle_substitutions(pattern.weak_constraints[0].body,
                                         facts, universe, opt.maxint);
  REQUIRE(subs.size() == 1);
  CHECK(subs[0].at("E") == num(2));
  CHECK(subs[0].at("G") == num(0));
}

TEST_CASE("ground instance counts match the substitution oracle") {
  // Two pacman positions x two ghost rows: the oracle and the grounder
  // must agree on which instances survive.
  Program p = parsed(
      ":~ pacman(A,B), blueGhost(C,D,1), E=C-A, E<=4, G=B-D, G<=1, -f(east). "
      "[1:3]\n"
      "pacman(10,10). pacman(14,10).\n"
      "blueGhost(12,10,1). blueGhost(16,10,1).\n"
      "f(east) v -f(east).");
  GroundOptions opt;
  opt.maxint = 40;
  Program g = ground(p, opt);

  std::vector<Term> universe;
  for (long long i = 0; i <= opt.maxint; ++i) universe.push_back(num(i));
  std::vector<Literal> facts = {lit("pacman", {num(10), num(10)}),
                                lit("pacman", {num(14), num(10)}),
                                lit("blueGhost", {num(12), num(10), num(1)}),
                                lit("blueGhost", {num(16), num(10), num(1)}),
                                neg("f", {cst("east")})};
  Program pattern = parsed(
      ":~ pacman(A,B), blueGhost(C,D,1), E=C-A, E<=4, G=B-D, G<=1, -f(east). "
      "[1:3]");
  auto subs = test::oracle_substitutions(pattern.weak_constraints[0].body,
                                         facts, universe, opt.maxint);
  // Distinct (A,B,C,D) combinations in the oracle, since E and G are
  // functions of them and the ground body projects them away.
  std::set<std::string> distinct;
  for (const auto& b : subs)
    distinct.insert(b.at("A").text() + "," + b.at("C").text());
  CHECK(g.weak_constraints.size() == distinct.size());
  CHECK(g.weak_constraints.size() == 2);  // (A=10,C=12) and (A=14,C=16)
}

TEST_CASE("unsafe rules throw with the variable name") {
  Program p;
  Rule r;
  r.head.push_back(lit("o", {var("X")}));
  p.rules.push_back(r);
  try {
    ground(p);
    FAIL("expected UnsafeRuleError");
  } catch (const UnsafeRuleError& e) {
    CHECK(e.variable == "X");
    CHECK(e.rule_text.find("o(X)") != std::string::npos);
  }
}

TEST_CASE("instance explosion hits the cap") {
  // p(X), p(Y), p(Z) over 40 constants would be 64000 instances.
  std::string text = "t(X,Y,Z) :- p(X), p(Y), p(Z).\n";
  for (int i = 0; i < 40; ++i) text += "p(c" + std::to_string(i) + ").\n";
  GroundOptions opt;
  opt.instance_cap = 1000;
  CHECK_THROWS_AS(ground(parsed(text), opt), GroundingExplosionError);
}

TEST_CASE("duplicate ground instances collapse") {
  // Both shift orientations produce the same ground body when G=0.
  Program p = parsed(
      ":~ pacman(A,B), blueGhost(C,D,1), E=C-A, E<=2, G=B-D, G<=1, -f(east). [1:4]\n"
      ":~ pacman(A,B), blueGhost(C,D,1), E=C-A, E<=2, G=D-B, G<=1, -f(east). [1:4]\n"
      "pacman(10,10).\n"
      "blueGhost(12,10,1).\n"
      "f(east) v -f(east).");
  GroundOptions opt;
  opt.maxint = 40;
  Program g = ground(p, opt);
  CHECK(g.weak_constraints.size() == 1);
}
