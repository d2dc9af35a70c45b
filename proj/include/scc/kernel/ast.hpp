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

#ifndef SCC_KERNEL_AST_HPP_
#define SCC_KERNEL_AST_HPP_

// Immutable syntax trees for synchronous programs. Trees are built with the
// combinators below and shared freely; a Program flattens them for execution.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scc::kernel {

enum class BinaryOp { Add, Sub, Mul, Lt, Le, Gt, Ge, Eq, Ne, And, Or };

enum class ExprKind {
  Const,
  Var,            // module-local integer variable
  SignalValue,    // ?S
  SignalPresent,  // presence of S as a 0/1 value
  Not,
  Binary,
};

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprKind kind = ExprKind::Const;
  std::int64_t value = 0;
  std::string name;
  BinaryOp op = BinaryOp::Add;
  Expr lhs;
  Expr rhs;
};

bool is_comparison(BinaryOp op);
const char* to_string(BinaryOp op);

/// Renders an expression in a compact infix form, e.g. `?DistanceSignal<=criticalDistance`.
std::string render(const Expr& e);

/// True if the expression reads the value of any signal.
bool reads_signal_value(const Expr& e);

Expr lit(std::int64_t v);
Expr ref(std::string var);
Expr value_of(std::string signal);
Expr is_present(std::string signal);
Expr not_(Expr e);
Expr binary(BinaryOp op, Expr lhs, Expr rhs);
inline Expr add(Expr a, Expr b) { return binary(BinaryOp::Add, std::move(a), std::move(b)); }
inline Expr sub(Expr a, Expr b) { return binary(BinaryOp::Sub, std::move(a), std::move(b)); }
inline Expr mul(Expr a, Expr b) { return binary(BinaryOp::Mul, std::move(a), std::move(b)); }
inline Expr lt(Expr a, Expr b) { return binary(BinaryOp::Lt, std::move(a), std::move(b)); }
inline Expr le(Expr a, Expr b) { return binary(BinaryOp::Le, std::move(a), std::move(b)); }
inline Expr gt(Expr a, Expr b) { return binary(BinaryOp::Gt, std::move(a), std::move(b)); }
inline Expr ge(Expr a, Expr b) { return binary(BinaryOp::Ge, std::move(a), std::move(b)); }
inline Expr eq(Expr a, Expr b) { return binary(BinaryOp::Eq, std::move(a), std::move(b)); }
inline Expr ne(Expr a, Expr b) { return binary(BinaryOp::Ne, std::move(a), std::move(b)); }
inline Expr and_(Expr a, Expr b) { return binary(BinaryOp::And, std::move(a), std::move(b)); }
inline Expr or_(Expr a, Expr b) { return binary(BinaryOp::Or, std::move(a), std::move(b)); }

enum class StmtKind {
  Nothing,
  Emit,
  Pause,
  Await,
  Present,
  Seq,
  Par,
  Loop,
  WeakAbort,
  Abort,
  EveryImmediate,
  VarDecl,
  Assign,
  If,
};

const char* to_string(StmtKind k);

struct StmtNode;
using Stmt = std::shared_ptr<const StmtNode>;

// Field use by kind:
//   Emit            name=signal, expr=optional value
//   Await           name=signal, immediate
//   Present         arm_signals[i] guards children[i]; children.back() is the
//                   else arm when has_else
//   Seq, Par        children
//   Loop            children[0]
//   WeakAbort/Abort name=signal, children[0]
//   EveryImmediate  name=signal, children[0]
//   VarDecl         name=variable, expr=initializer, children[0]
//   Assign          name=variable, expr
//   If              expr=condition, children[0]=then, children[1]=else if has_else
struct StmtNode {
  StmtKind kind = StmtKind::Nothing;
  std::string name;
  Expr expr;
  bool immediate = false;
  bool has_else = false;
  std::vector<std::string> arm_signals;
  std::vector<Stmt> children;
};

struct PresentArm {
  std::string signal;
  Stmt body;
};

Stmt nothing();
Stmt pause_();
Stmt emit(std::string signal);
Stmt emit(std::string signal, Expr value);
Stmt await(std::string signal);
Stmt await_immediate(std::string signal);
Stmt present(std::string signal, Stmt then_branch, Stmt else_branch = nullptr);
Stmt present_case(std::vector<PresentArm> arms, Stmt else_branch = nullptr);
Stmt seq(std::vector<Stmt> children);
Stmt par(std::vector<Stmt> children);
Stmt loop(Stmt body);
Stmt weak_abort(Stmt body, std::string signal);
Stmt strong_abort(Stmt body, std::string signal);
Stmt every_immediate(std::string signal, Stmt body);
Stmt local_var(std::string name, Expr init, Stmt body);
Stmt assign(std::string name, Expr value);
Stmt if_(Expr cond, Stmt then_branch, Stmt else_branch = nullptr);

/// Pretty-prints a statement tree in an Esterel-like concrete syntax.
std::string render(const Stmt& s);

}  // namespace scc::kernel

#endif  // SCC_KERNEL_AST_HPP_
