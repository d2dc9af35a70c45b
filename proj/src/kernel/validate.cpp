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

#include "scc/kernel/validate.hpp"

#include <set>
#include <sstream>

namespace scc::kernel {

const char* to_string(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::DuplicateSignal: return "duplicate signal";
    case DiagnosticKind::UndeclaredSignal: return "undeclared signal";
    case DiagnosticKind::UndeclaredVariable: return "undeclared variable";
    case DiagnosticKind::EmitOnInput: return "emit on input";
    case DiagnosticKind::ValueOfPureSignal: return "value of pure signal";
    case DiagnosticKind::MissingValue: return "missing value";
    case DiagnosticKind::InstantaneousLoop: return "instantaneous loop";
    case DiagnosticKind::SharedVariable: return "shared variable";
  }
  return "?";
}

bool can_terminate_instantly(const Stmt& s) {
  switch (s->kind) {
    case StmtKind::Nothing:
    case StmtKind::Emit:
    case StmtKind::Assign:
      return true;
    case StmtKind::Pause:
    case StmtKind::Loop:
    case StmtKind::EveryImmediate:
      return false;
    case StmtKind::Await:
      return s->immediate;
    case StmtKind::Present: {
      if (!s->has_else) return true;
      for (const auto& c : s->children) {
        if (can_terminate_instantly(c)) return true;
      }
      return false;
    }
    case StmtKind::If:
      return !s->has_else || can_terminate_instantly(s->children[0]) ||
             can_terminate_instantly(s->children[1]);
    case StmtKind::Seq:
    case StmtKind::Par:
      for (const auto& c : s->children) {
        if (!can_terminate_instantly(c)) return false;
      }
      return true;
    case StmtKind::WeakAbort:
    case StmtKind::Abort:
    case StmtKind::VarDecl:
      return can_terminate_instantly(s->children[0]);
  }
  return true;
}

namespace {

class Validator {
 public:
  explicit Validator(const Program& p) : p_(p) {}

  std::vector<Diagnostic> run() {
    std::set<std::string> seen;
    for (const auto& s : p_.signals()) {
      if (!seen.insert(s.name).second) {
        add(DiagnosticKind::DuplicateSignal, "signal '" + s.name + "' declared twice");
      }
    }
    check_loops(p_.body());
    for (NodeId id = 0; id < p_.nodes().size(); ++id) check_node(id);
    return std::move(diags_);
  }

 private:
  void add(DiagnosticKind k, std::string msg) { diags_.push_back({k, std::move(msg)}); }

  void check_loops(const Stmt& s) {
    if (s->kind == StmtKind::Loop && can_terminate_instantly(s->children[0])) {
      add(DiagnosticKind::InstantaneousLoop,
          "loop body may terminate in the instant it starts:\n" + render(s));
    }
    for (const auto& c : s->children) check_loops(c);
  }

  void check_signal_ref(int slot, const std::string& name, const char* ctx) {
    if (slot == kUnresolved) {
      add(DiagnosticKind::UndeclaredSignal, std::string(ctx) + " references undeclared signal '" + name + "'");
    }
  }

  void check_expr(int idx) {
    if (idx < 0) return;
    const FlatExpr& e = p_.exprs()[idx];
    switch (e.kind) {
      case ExprKind::Var:
        if (e.slot == kUnresolved) {
          add(DiagnosticKind::UndeclaredVariable, "variable '" + e.name + "' is not in scope");
        }
        break;
      case ExprKind::SignalValue:
        check_signal_ref(e.slot, e.name, "value read");
        if (e.slot != kUnresolved && p_.signal(e.slot).kind == SignalKind::Pure) {
          add(DiagnosticKind::ValueOfPureSignal, "value read of pure signal '" + e.name + "'");
        }
        break;
      case ExprKind::SignalPresent:
        check_signal_ref(e.slot, e.name, "presence test");
        break;
      case ExprKind::Not:
        check_expr(e.lhs);
        break;
      case ExprKind::Binary:
        check_expr(e.lhs);
        check_expr(e.rhs);
        break;
      case ExprKind::Const:
        break;
    }
  }

  void check_node(NodeId id) {
    const FlatNode& n = p_.nodes()[id];
    check_expr(n.expr);
    switch (n.kind) {
      case StmtKind::Emit: {
        check_signal_ref(n.signal, n.name, "emit");
        if (n.signal == kUnresolved) break;
        const SignalDecl& d = p_.signal(n.signal);
        if (d.direction == Direction::Input) {
          add(DiagnosticKind::EmitOnInput, "emit on input signal '" + d.name + "'");
        }
        if (d.kind == SignalKind::Pure && n.expr >= 0) {
          add(DiagnosticKind::ValueOfPureSignal, "value emitted on pure signal '" + d.name + "'");
        }
        if (d.kind == SignalKind::Valued && n.expr < 0) {
          add(DiagnosticKind::MissingValue, "valued signal '" + d.name + "' emitted without a value");
        }
        break;
      }
      case StmtKind::Await:
      case StmtKind::WeakAbort:
      case StmtKind::Abort:
      case StmtKind::EveryImmediate:
        check_signal_ref(n.signal, n.name, to_string(n.kind));
        break;
      case StmtKind::Present:
        for (std::size_t i = 0; i < n.arm_signals.size(); ++i) {
          check_signal_ref(n.arm_signals[i], n.arm_names[i], "present");
        }
        break;
      case StmtKind::Assign:
        if (n.var == kUnresolved) {
          add(DiagnosticKind::UndeclaredVariable, "assignment to '" + n.name + "' which is not in scope");
        }
        break;
      case StmtKind::Par:
        check_par(n);
        break;
      default:
        break;
    }
  }

  void collect_vars(NodeId id, std::set<int>& written, std::set<int>& read) const {
    const FlatNode& root = p_.nodes()[id];
    for (NodeId i = id; i < root.end; ++i) {
      const FlatNode& n = p_.nodes()[i];
      if (n.kind == StmtKind::Assign && n.var != kUnresolved) written.insert(n.var);
      collect_expr_vars(n.expr, read);
    }
  }

  void collect_expr_vars(int idx, std::set<int>& read) const {
    if (idx < 0) return;
    const FlatExpr& e = p_.exprs()[idx];
    if (e.kind == ExprKind::Var && e.slot != kUnresolved) read.insert(e.slot);
    collect_expr_vars(e.lhs, read);
    collect_expr_vars(e.rhs, read);
  }

  void check_par(const FlatNode& n) {
    std::vector<std::set<int>> written(n.children.size());
    std::vector<std::set<int>> read(n.children.size());
    for (std::size_t i = 0; i < n.children.size(); ++i) collect_vars(n.children[i], written[i], read[i]);
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      for (std::size_t j = 0; j < n.children.size(); ++j) {
        if (i == j) continue;
        for (int v : written[i]) {
          if (written[j].count(v) || read[j].count(v)) {
            if (i < j || !written[j].count(v)) {
              add(DiagnosticKind::SharedVariable,
                  "variable '" + p_.variable_name(v) + "' is written in one parallel branch and used in another");
            }
          }
        }
      }
    }
  }

  const Program& p_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> validate_program(const Program& program) {
  return Validator(program).run();
}

std::string format_diagnostics(const std::vector<Diagnostic>& diags) {
  std::ostringstream os;
  for (const auto& d : diags) os << to_string(d.kind) << ": " << d.message << '\n';
  return os.str();
}

}  // namespace scc::kernel
