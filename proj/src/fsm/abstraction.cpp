// Copyright 2026 The syncruise Authors
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

#include "scc/fsm/abstraction.hpp"

#include <memory>
#include <set>

namespace scc::fsm {

using namespace scc::kernel;

namespace {

class Abstractor {
 public:
  explicit Abstractor(const Program& p) : program_(p) {}

  AbstractedProgram run() {
    Stmt body = stmt(program_.body());
    std::vector<SignalDecl> decls;
    for (const auto& d : program_.signals()) {
      if (referenced_.count(d.name)) decls.push_back({d.name, SignalKind::Pure, d.direction});
      for (const auto& name : constant_emits_[d.name]) decls.push_back({name, SignalKind::Pure, d.direction});
    }
    for (const auto& [name, _] : map_.tests) decls.push_back(pure_input(name));
    return {Program(program_.name(), std::move(decls), std::move(body)), std::move(map_)};
  }

 private:
  [[noreturn]] void reject(const std::string& what) const {
    throw UnabstractableValueUse("'" + program_.name() + "': " + what);
  }

  Expr condition(const Expr& e) {
    switch (e->kind) {
      case ExprKind::SignalPresent:
        referenced_.insert(e->name);
        return e;
      case ExprKind::SignalValue:
        reject("value of " + e->name + " used outside a comparison");
      case ExprKind::Not:
        return not_(condition(e->lhs));
      case ExprKind::Binary:
        if (is_comparison(e->op) && reads_signal_value(e)) {
          std::string fresh = render(e);
          map_.tests.emplace(fresh, e);
          return is_present(fresh);
        }
        if (e->op == BinaryOp::And || e->op == BinaryOp::Or) {
          return binary(e->op, condition(e->lhs), condition(e->rhs));
        }
        if (reads_signal_value(e)) reject("value use '" + render(e) + "' is not a comparison");
        return e;
      default:
        return e;
    }
  }

  Stmt stmt(const Stmt& s) {
    auto copy = std::make_shared<StmtNode>(*s);
    for (auto& c : copy->children) c = stmt(c);
    switch (s->kind) {
      case StmtKind::Emit:
        if (s->expr) {
          if (s->expr->kind != ExprKind::Const) {
            reject("emit " + s->name + "(" + render(s->expr) + ") carries a computed value");
          }
          copy->name = s->name + "(" + std::to_string(s->expr->value) + ")";
          copy->expr = nullptr;
          constant_emits_[s->name].insert(copy->name);
        } else {
          referenced_.insert(s->name);
        }
        break;
      case StmtKind::If:
        copy->expr = condition(s->expr);
        break;
      case StmtKind::Assign:
      case StmtKind::VarDecl:
        if (reads_signal_value(s->expr)) reject("variable " + s->name + " is computed from a signal value");
        break;
      case StmtKind::Present:
        for (const auto& a : s->arm_signals) referenced_.insert(a);
        break;
      case StmtKind::Await:
      case StmtKind::WeakAbort:
      case StmtKind::Abort:
      case StmtKind::EveryImmediate:
        referenced_.insert(s->name);
        break;
      default:
        break;
    }
    return copy;
  }

  const Program& program_;
  TestSignalMap map_;
  std::set<std::string> referenced_;
  std::map<std::string, std::set<std::string>> constant_emits_;
};

bool expr_reads_value(const Stmt& s) {
  if (reads_signal_value(s->expr)) return true;
  for (const auto& c : s->children) {
    if (expr_reads_value(c)) return true;
  }
  return false;
}

}  // namespace

AbstractedProgram abstract_valued_tests(const Program& program) {
  return Abstractor(program).run();
}

bool is_pure(const Program& program) {
  for (const auto& d : program.signals()) {
    if (d.kind != SignalKind::Pure) return false;
  }
  return !expr_reads_value(program.body());
}

}  // namespace scc::fsm
