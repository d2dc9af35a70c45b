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

#ifndef SCC_KERNEL_PROGRAM_HPP_
#define SCC_KERNEL_PROGRAM_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scc/kernel/ast.hpp"

namespace scc::kernel {

enum class SignalKind { Pure, Valued };
enum class Direction { Input, Output, Local };

struct SignalDecl {
  std::string name;
  SignalKind kind = SignalKind::Pure;
  Direction direction = Direction::Input;

  bool operator==(const SignalDecl&) const = default;
};

inline SignalDecl pure_input(std::string n) { return {std::move(n), SignalKind::Pure, Direction::Input}; }
inline SignalDecl pure_output(std::string n) { return {std::move(n), SignalKind::Pure, Direction::Output}; }
inline SignalDecl pure_local(std::string n) { return {std::move(n), SignalKind::Pure, Direction::Local}; }
inline SignalDecl valued_input(std::string n) { return {std::move(n), SignalKind::Valued, Direction::Input}; }
inline SignalDecl valued_output(std::string n) { return {std::move(n), SignalKind::Valued, Direction::Output}; }
inline SignalDecl valued_local(std::string n) { return {std::move(n), SignalKind::Valued, Direction::Local}; }

using NodeId = std::uint32_t;
inline constexpr int kUnresolved = -1;

// Expression compiled against the program's signal table and variable slots.
struct FlatExpr {
  ExprKind kind = ExprKind::Const;
  std::int64_t value = 0;
  int slot = kUnresolved;  // signal index or variable slot
  BinaryOp op = BinaryOp::Add;
  int lhs = -1;
  int rhs = -1;
  std::string name;
};

// Statement in preorder; [id, end) is the subtree.
struct FlatNode {
  StmtKind kind = StmtKind::Nothing;
  int signal = kUnresolved;
  int var = kUnresolved;
  int expr = -1;
  bool immediate = false;
  bool has_else = false;
  std::vector<int> arm_signals;
  std::vector<NodeId> children;
  NodeId end = 0;
  std::string name;                    // source name of signal/variable
  std::vector<std::string> arm_names;  // source names of present arms
};

/// A named synchronous module: signal interface plus body. Construction never
/// fails on semantic problems; validate_program reports them.
class Program {
 public:
  Program(std::string name, std::vector<SignalDecl> signals, Stmt body);

  const std::string& name() const { return name_; }
  const std::vector<SignalDecl>& signals() const { return signals_; }
  const Stmt& body() const { return body_; }

  std::optional<std::size_t> find_signal(std::string_view name) const;
  const SignalDecl& signal(std::size_t index) const { return signals_[index]; }
  std::vector<std::string> signal_names(Direction d) const;

  const std::vector<FlatNode>& nodes() const { return nodes_; }
  const std::vector<FlatExpr>& exprs() const { return exprs_; }
  std::size_t variable_count() const { return var_names_.size(); }
  const std::string& variable_name(int slot) const { return var_names_[slot]; }
  NodeId variable_decl(int slot) const { return var_decls_[slot]; }

 private:
  NodeId flatten(const Stmt& s, std::vector<std::pair<std::string, int>>& scope);
  int flatten_expr(const Expr& e, const std::vector<std::pair<std::string, int>>& scope);
  int resolve_signal(const std::string& name) const;

  std::string name_;
  std::vector<SignalDecl> signals_;
  Stmt body_;
  std::vector<FlatNode> nodes_;
  std::vector<FlatExpr> exprs_;
  std::vector<std::string> var_names_;
  std::vector<NodeId> var_decls_;
};

using ProgramPtr = std::shared_ptr<const Program>;

/// Parallel composition of modules under one interface. A signal emitted by
/// one part and read by another becomes an output (or a local when hidden).
/// Throws std::invalid_argument on conflicting signal kinds or clashing locals.
Program compose(std::string name, const std::vector<Program>& parts,
                const std::set<std::string>& hidden = {});

}  // namespace scc::kernel

#endif  // SCC_KERNEL_PROGRAM_HPP_
