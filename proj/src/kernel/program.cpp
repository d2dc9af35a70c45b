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

#include "scc/kernel/program.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace scc::kernel {

Program::Program(std::string name, std::vector<SignalDecl> signals, Stmt body)
    : name_(std::move(name)), signals_(std::move(signals)), body_(std::move(body)) {
  if (!body_) throw std::invalid_argument("program '" + name_ + "' has no body");
  std::vector<std::pair<std::string, int>> scope;
  flatten(body_, scope);
}

std::optional<std::size_t> Program::find_signal(std::string_view name) const {
  for (std::size_t i = 0; i < signals_.size(); ++i) {
    if (signals_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::string> Program::signal_names(Direction d) const {
  std::vector<std::string> out;
  for (const auto& s : signals_) {
    if (s.direction == d) out.push_back(s.name);
  }
  return out;
}

int Program::resolve_signal(const std::string& name) const {
  auto idx = find_signal(name);
  return idx ? static_cast<int>(*idx) : kUnresolved;
}

int Program::flatten_expr(const Expr& e,
                          const std::vector<std::pair<std::string, int>>& scope) {
  FlatExpr fe;
  fe.kind = e->kind;
  fe.value = e->value;
  fe.op = e->op;
  fe.name = e->name;
  switch (e->kind) {
    case ExprKind::Var:
      for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
        if (it->first == e->name) {
          fe.slot = it->second;
          break;
        }
      }
      break;
    case ExprKind::SignalValue:
    case ExprKind::SignalPresent:
      fe.slot = resolve_signal(e->name);
      break;
    case ExprKind::Not:
      fe.lhs = flatten_expr(e->lhs, scope);
      break;
    case ExprKind::Binary:
      fe.lhs = flatten_expr(e->lhs, scope);
      fe.rhs = flatten_expr(e->rhs, scope);
      break;
    case ExprKind::Const:
      break;
  }
  exprs_.push_back(std::move(fe));
  return static_cast<int>(exprs_.size() - 1);
}

NodeId Program::flatten(const Stmt& s, std::vector<std::pair<std::string, int>>& scope) {
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.emplace_back();
  {
    FlatNode& n = nodes_.back();
    n.kind = s->kind;
    n.immediate = s->immediate;
    n.has_else = s->has_else;
    n.name = s->name;
    n.arm_names = s->arm_signals;
  }

  int signal = kUnresolved;
  int var = kUnresolved;
  int expr = -1;
  std::vector<int> arms;
  switch (s->kind) {
    case StmtKind::Emit:
    case StmtKind::Await:
    case StmtKind::WeakAbort:
    case StmtKind::Abort:
    case StmtKind::EveryImmediate:
      signal = resolve_signal(s->name);
      break;
    case StmtKind::Present:
      for (const auto& a : s->arm_signals) arms.push_back(resolve_signal(a));
      break;
    case StmtKind::Assign:
      for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
        if (it->first == s->name) {
          var = it->second;
          break;
        }
      }
      break;
    default:
      break;
  }
  // Initializers are evaluated outside the new scope.
  if (s->expr) expr = flatten_expr(s->expr, scope);

  bool pushed_scope = false;
  if (s->kind == StmtKind::VarDecl) {
    var = static_cast<int>(var_names_.size());
    var_names_.push_back(s->name);
    var_decls_.push_back(id);
    scope.emplace_back(s->name, var);
    pushed_scope = true;
  }

  std::vector<NodeId> children;
  for (const auto& c : s->children) children.push_back(flatten(c, scope));
  if (pushed_scope) scope.pop_back();

  FlatNode& n = nodes_[id];
  n.signal = signal;
  n.var = var;
  n.expr = expr;
  n.arm_signals = std::move(arms);
  n.children = std::move(children);
  n.end = static_cast<NodeId>(nodes_.size());
  return id;
}

Program compose(std::string name, const std::vector<Program>& parts,
                const std::set<std::string>& hidden) {
  std::vector<SignalDecl> merged;
  std::map<std::string, std::size_t> index;
  for (const auto& part : parts) {
    for (const auto& s : part.signals()) {
      auto it = index.find(s.name);
      if (it == index.end()) {
        index.emplace(s.name, merged.size());
        merged.push_back(s);
        continue;
      }
      SignalDecl& m = merged[it->second];
      if (m.kind != s.kind) {
        throw std::invalid_argument("signal '" + s.name + "' declared both pure and valued");
      }
      if (m.direction == Direction::Local || s.direction == Direction::Local) {
        throw std::invalid_argument("local signal '" + s.name + "' clashes between modules");
      }
      if (s.direction == Direction::Output) m.direction = Direction::Output;
    }
  }
  for (auto& m : merged) {
    if (hidden.count(m.name)) {
      if (m.direction == Direction::Input) {
        throw std::invalid_argument("cannot hide input-only signal '" + m.name + "'");
      }
      m.direction = Direction::Local;
    }
  }
  std::vector<Stmt> bodies;
  for (const auto& part : parts) bodies.push_back(part.body());
  return Program(std::move(name), std::move(merged), par(std::move(bodies)));
}

}  // namespace scc::kernel
