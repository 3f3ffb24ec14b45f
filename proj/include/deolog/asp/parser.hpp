/*
 *  Copyright (C) 2026  deolog contributors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

#include "deolog/asp/ast.hpp"

namespace deolog::asp {

struct SourceProgram {
  std::string text;
  std::string name = "<input>";
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string to_string() const;
};

struct ParseResult {
  Program program;
  std::vector<Diagnostic> diagnostics;

  bool ok() const {
    for (const auto& d : diagnostics)
      if (d.severity == Severity::Error) return false;
    return true;
  }
};

/// Parse the DLV-like concrete syntax used throughout the toolkit:
///   - "h1 v h2 :- a, not b, E=C-A, E<=2."  rules with builtins
///   - ":- a, b."                           hard constraints
///   - ":~ a, not b. [w:l]"                 weak constraints
///   - "-a" strong negation, "%" comments
/// Statement-level recovery: a malformed statement yields one
/// diagnostic and parsing resumes after the next period.
ParseResult parse(const SourceProgram& source);
ParseResult parse(const std::string& text);

/// Parse a single literal, e.g. "-o(mail)" or "happens(merge)".
/// Throws Error on malformed input.
Literal parse_literal(const std::string& text);

/// Canonical text form: one statement per line, rules before weak
/// constraints, "-" for strong negation and "v" for disjunction.
/// parse(print(p)) reproduces p exactly.
std::string print(const Program& program);

}  // namespace deolog::asp
