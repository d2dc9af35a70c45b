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

#include "scc/kernel/ast.hpp"

#include <sstream>
#include <stdexcept>

namespace scc::kernel {

bool is_comparison(BinaryOp op) {
  switch (op) {
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge:
    case BinaryOp::Eq:
    case BinaryOp::Ne:
      return true;
    default:
      return false;
  }
}

const char* to_string(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Eq: return "=";
    case BinaryOp::Ne: return "<>";
    case BinaryOp::And: return " and ";
    case BinaryOp::Or: return " or ";
  }
  return "?";
}

const char* to_string(StmtKind k) {
  switch (k) {
    case StmtKind::Nothing: return "nothing";
    case StmtKind::Emit: return "emit";
    case StmtKind::Pause: return "pause";
    case StmtKind::Await: return "await";
    case StmtKind::Present: return "present";
    case StmtKind::Seq: return "seq";
    case StmtKind::Par: return "par";
    case StmtKind::Loop: return "loop";
    case StmtKind::WeakAbort: return "weak abort";
    case StmtKind::Abort: return "abort";
    case StmtKind::EveryImmediate: return "every immediate";
    case StmtKind::VarDecl: return "var";
    case StmtKind::Assign: return "assign";
    case StmtKind::If: return "if";
  }
  return "?";
}

namespace {

void render_expr(const Expr& e, std::ostream& os, bool nested) {
  switch (e->kind) {
    case ExprKind::Const: os << e->value; break;
    case ExprKind::Var: os << e->name; break;
    case ExprKind::SignalValue: os << '?' << e->name; break;
    case ExprKind::SignalPresent: os << e->name; break;
    case ExprKind::Not:
      os << "not ";
      render_expr(e->lhs, os, true);
      break;
    case ExprKind::Binary: {
      bool parens = nested && !is_comparison(e->op);
      if (parens) os << '(';
      render_expr(e->lhs, os, true);
      os << to_string(e->op);
      render_expr(e->rhs, os, true);
      if (parens) os << ')';
      break;
    }
  }
}

Expr make_expr(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }
Stmt make_stmt(StmtNode n) { return std::make_shared<const StmtNode>(std::move(n)); }

void require(const Stmt& s, const char* what) {
  if (!s) throw std::invalid_argument(std::string("null statement passed to ") + what);
}

}  // namespace

std::string render(const Expr& e) {
  std::ostringstream os;
  render_expr(e, os, false);
  return os.str();
}

bool reads_signal_value(const Expr& e) {
  if (!e) return false;
  if (e->kind == ExprKind::SignalValue) return true;
  return reads_signal_value(e->lhs) || reads_signal_value(e->rhs);
}

Expr lit(std::int64_t v) {
  ExprNode n;
  n.kind = ExprKind::Const;
  n.value = v;
  return make_expr(std::move(n));
}

Expr ref(std::string var) {
  ExprNode n;
  n.kind = ExprKind::Var;
  n.name = std::move(var);
  return make_expr(std::move(n));
}

Expr value_of(std::string signal) {
  ExprNode n;
  n.kind = ExprKind::SignalValue;
  n.name = std::move(signal);
  return make_expr(std::move(n));
}

Expr is_present(std::string signal) {
  ExprNode n;
  n.kind = ExprKind::SignalPresent;
  n.name = std::move(signal);
  return make_expr(std::move(n));
}

Expr not_(Expr e) {
  ExprNode n;
  n.kind = ExprKind::Not;
  n.lhs = std::move(e);
  return make_expr(std::move(n));
}

Expr binary(BinaryOp op, Expr lhs, Expr rhs) {
  ExprNode n;
  n.kind = ExprKind::Binary;
  n.op = op;
  n.lhs = std::move(lhs);
  n.rhs = std::move(rhs);
  return make_expr(std::move(n));
}

Stmt nothing() { return make_stmt({}); }

Stmt pause_() {
  StmtNode n;
  n.kind = StmtKind::Pause;
  return make_stmt(std::move(n));
}

Stmt emit(std::string signal) {
  StmtNode n;
  n.kind = StmtKind::Emit;
  n.name = std::move(signal);
  return make_stmt(std::move(n));
}

Stmt emit(std::string signal, Expr value) {
  StmtNode n;
  n.kind = StmtKind::Emit;
  n.name = std::move(signal);
  n.expr = std::move(value);
  return make_stmt(std::move(n));
}

Stmt await(std::string signal) {
  StmtNode n;
  n.kind = StmtKind::Await;
  n.name = std::move(signal);
  return make_stmt(std::move(n));
}

Stmt await_immediate(std::string signal) {
  StmtNode n;
  n.kind = StmtKind::Await;
  n.name = std::move(signal);
  n.immediate = true;
  return make_stmt(std::move(n));
}

Stmt present(std::string signal, Stmt then_branch, Stmt else_branch) {
  return present_case({{std::move(signal), std::move(then_branch)}}, std::move(else_branch));
}

Stmt present_case(std::vector<PresentArm> arms, Stmt else_branch) {
  StmtNode n;
  n.kind = StmtKind::Present;
  for (auto& arm : arms) {
    require(arm.body, "present");
    n.arm_signals.push_back(std::move(arm.signal));
    n.children.push_back(std::move(arm.body));
  }
  if (else_branch) {
    n.has_else = true;
    n.children.push_back(std::move(else_branch));
  }
  return make_stmt(std::move(n));
}

Stmt seq(std::vector<Stmt> children) {
  StmtNode n;
  n.kind = StmtKind::Seq;
  for (const auto& c : children) require(c, "seq");
  n.children = std::move(children);
  return make_stmt(std::move(n));
}

Stmt par(std::vector<Stmt> children) {
  StmtNode n;
  n.kind = StmtKind::Par;
  for (const auto& c : children) require(c, "par");
  n.children = std::move(children);
  return make_stmt(std::move(n));
}

Stmt loop(Stmt body) {
  require(body, "loop");
  StmtNode n;
  n.kind = StmtKind::Loop;
  n.children.push_back(std::move(body));
  return make_stmt(std::move(n));
}

Stmt weak_abort(Stmt body, std::string signal) {
  require(body, "weak_abort");
  StmtNode n;
  n.kind = StmtKind::WeakAbort;
  n.name = std::move(signal);
  n.children.push_back(std::move(body));
  return make_stmt(std::move(n));
}

Stmt strong_abort(Stmt body, std::string signal) {
  require(body, "abort");
  StmtNode n;
  n.kind = StmtKind::Abort;
  n.name = std::move(signal);
  n.children.push_back(std::move(body));
  return make_stmt(std::move(n));
}

Stmt every_immediate(std::string signal, Stmt body) {
  require(body, "every_immediate");
  StmtNode n;
  n.kind = StmtKind::EveryImmediate;
  n.name = std::move(signal);
  n.children.push_back(std::move(body));
  return make_stmt(std::move(n));
}

Stmt local_var(std::string name, Expr init, Stmt body) {
  require(body, "local_var");
  StmtNode n;
  n.kind = StmtKind::VarDecl;
  n.name = std::move(name);
  n.expr = std::move(init);
  n.children.push_back(std::move(body));
  return make_stmt(std::move(n));
}

Stmt assign(std::string name, Expr value) {
  StmtNode n;
  n.kind = StmtKind::Assign;
  n.name = std::move(name);
  n.expr = std::move(value);
  return make_stmt(std::move(n));
}

Stmt if_(Expr cond, Stmt then_branch, Stmt else_branch) {
  require(then_branch, "if_");
  StmtNode n;
  n.kind = StmtKind::If;
  n.expr = std::move(cond);
  n.children.push_back(std::move(then_branch));
  if (else_branch) {
    n.has_else = true;
    n.children.push_back(std::move(else_branch));
  }
  return make_stmt(std::move(n));
}

namespace {

void indent(std::ostream& os, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
}

void render_stmt(const Stmt& s, std::ostream& os, int depth) {
  indent(os, depth);
  switch (s->kind) {
    case StmtKind::Nothing: os << "nothing\n"; break;
    case StmtKind::Pause: os << "pause\n"; break;
    case StmtKind::Emit:
      os << "emit " << s->name;
      if (s->expr) os << '(' << render(s->expr) << ')';
      os << '\n';
      break;
    case StmtKind::Await:
      os << "await " << (s->immediate ? "immediate " : "") << s->name << '\n';
      break;
    case StmtKind::Present: {
      std::size_t arms = s->arm_signals.size();
      os << "present\n";
      for (std::size_t i = 0; i < arms; ++i) {
        indent(os, depth);
        os << "case " << s->arm_signals[i] << " do\n";
        render_stmt(s->children[i], os, depth + 1);
      }
      if (s->has_else) {
        indent(os, depth);
        os << "else\n";
        render_stmt(s->children.back(), os, depth + 1);
      }
      indent(os, depth);
      os << "end present\n";
      break;
    }
    case StmtKind::Seq:
    case StmtKind::Par: {
      os << (s->kind == StmtKind::Seq ? "[\n" : "[[\n");
      for (std::size_t i = 0; i < s->children.size(); ++i) {
        if (i > 0) {
          indent(os, depth);
          os << (s->kind == StmtKind::Seq ? ";\n" : "||\n");
        }
        render_stmt(s->children[i], os, depth + 1);
      }
      indent(os, depth);
      os << (s->kind == StmtKind::Seq ? "]\n" : "]]\n");
      break;
    }
    case StmtKind::Loop:
      os << "loop\n";
      render_stmt(s->children[0], os, depth + 1);
      indent(os, depth);
      os << "end loop\n";
      break;
    case StmtKind::WeakAbort:
    case StmtKind::Abort:
      os << (s->kind == StmtKind::WeakAbort ? "weak abort\n" : "abort\n");
      render_stmt(s->children[0], os, depth + 1);
      indent(os, depth);
      os << "when " << s->name << '\n';
      break;
    case StmtKind::EveryImmediate:
      os << "every immediate " << s->name << " do\n";
      render_stmt(s->children[0], os, depth + 1);
      indent(os, depth);
      os << "end every\n";
      break;
    case StmtKind::VarDecl:
      os << "var " << s->name << " := " << render(s->expr) << " in\n";
      render_stmt(s->children[0], os, depth + 1);
      indent(os, depth);
      os << "end var\n";
      break;
    case StmtKind::Assign:
      os << s->name << " := " << render(s->expr) << '\n';
      break;
    case StmtKind::If:
      os << "if " << render(s->expr) << " then\n";
      render_stmt(s->children[0], os, depth + 1);
      if (s->has_else) {
        indent(os, depth);
        os << "else\n";
        render_stmt(s->children[1], os, depth + 1);
      }
      indent(os, depth);
      os << "end if\n";
      break;
  }
}

}  // namespace

std::string render(const Stmt& s) {
  std::ostringstream os;
  render_stmt(s, os, 0);
  return os.str();
}

}  // namespace scc::kernel
