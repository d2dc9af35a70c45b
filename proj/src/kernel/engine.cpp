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

// One instant is computed as a fixpoint over three-valued signal statuses.
// Each iteration re-executes the reaction from the instant's start state,
// blocking on tests of unknown signals. When an iteration blocks without
// learning a new present signal, a may-execution computes the set of signals
// that can still be emitted; unknown signals outside it become absent. No
// progress at that point is a causality error.

#include "scc/kernel/engine.hpp"

#include <algorithm>
#include <cassert>

#include "scc/kernel/validate.hpp"

namespace scc::kernel {

namespace {

enum class Status : std::uint8_t { Unknown, Present, Absent };

// Completion codes; may-execution returns a mask of kTerm|kPause.
constexpr unsigned kTerm = 1;
constexpr unsigned kPause = 2;
constexpr unsigned kBlocked = 4;

struct Value {
  bool blocked = false;
  std::int64_t v = 0;
};

using AbstractStore = std::vector<std::optional<std::int64_t>>;

void join_into(AbstractStore& acc, const AbstractStore& other, bool& first) {
  if (first) {
    acc = other;
    first = false;
    return;
  }
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] != other[i]) acc[i].reset();
  }
}

std::int64_t apply(BinaryOp op, std::int64_t a, std::int64_t b) {
  switch (op) {
    case BinaryOp::Add: return a + b;
    case BinaryOp::Sub: return a - b;
    case BinaryOp::Mul: return a * b;
    case BinaryOp::Lt: return a < b;
    case BinaryOp::Le: return a <= b;
    case BinaryOp::Gt: return a > b;
    case BinaryOp::Ge: return a >= b;
    case BinaryOp::Eq: return a == b;
    case BinaryOp::Ne: return a != b;
    case BinaryOp::And: return (a != 0) && (b != 0);
    case BinaryOp::Or: return (a != 0) || (b != 0);
  }
  return 0;
}

}  // namespace

ExecState::ExecState(ProgramPtr p) : program_(std::move(p)) {
  vars_.resize(program_->variable_count());
  values_.resize(program_->signals().size());
}

ExecState ExecState::initial(ProgramPtr program) {
  if (!program) throw KernelError("null program");
  auto diags = validate_program(*program);
  if (!diags.empty()) {
    throw InvalidProgram("program '" + program->name() + "' is invalid:\n" + format_diagnostics(diags));
  }
  return ExecState(std::move(program));
}

std::vector<std::int64_t> ExecState::control_key() const {
  std::vector<std::int64_t> key;
  key.reserve(2 + resume_.size() + 2 * vars_.size());
  key.push_back(booted_ ? 1 : 0);
  key.push_back(static_cast<std::int64_t>(resume_.size()));
  for (NodeId r : resume_) key.push_back(r);
  for (const auto& v : vars_) {
    key.push_back(v.has_value() ? 1 : 0);
    key.push_back(v.value_or(0));
  }
  return key;
}

class Reactor {
 public:
  Reactor(const ExecState& state, const SignalSet& inputs)
      : state_(state), prog_(state.program()), nodes_(prog_.nodes()), exprs_(prog_.exprs()) {
    const std::size_t n = prog_.signals().size();
    status_.assign(n, Status::Unknown);
    instant_.assign(n, std::nullopt);
    for (std::size_t i = 0; i < n; ++i) {
      if (prog_.signal(i).direction == Direction::Input) status_[i] = Status::Absent;
    }
    for (const auto& [name, value] : inputs) {
      auto idx = prog_.find_signal(name);
      if (!idx) throw UndeclaredSignal("input '" + name + "' is not declared in '" + prog_.name() + "'");
      const SignalDecl& d = prog_.signal(*idx);
      if (d.direction != Direction::Input) {
        throw UndeclaredSignal("'" + name + "' is not an input of '" + prog_.name() + "'");
      }
      if (d.kind == SignalKind::Valued && !value) {
        throw KernelError("valued input '" + name + "' given without a value");
      }
      if (d.kind == SignalKind::Pure && value) {
        throw KernelError("pure input '" + name + "' given a value");
      }
      status_[*idx] = Status::Present;
      instant_[*idx] = value;
    }
  }

  Reaction react() {
    if (state_.terminated()) return Reaction{{}, {}, state_, Completion::Terminated};
    const NodeId root = 0;
    const bool depth = state_.booted();
    for (;;) {
      store_ = state_.vars_;
      next_resume_.clear();
      changed_ = false;
      unsigned code = exec(root, depth);
      if (code != kBlocked) return finish(code);
      if (changed_) continue;

      can_.assign(status_.size(), false);
      AbstractStore st = state_.vars_;
      may(root, depth, st);
      bool progress = false;
      for (std::size_t i = 0; i < status_.size(); ++i) {
        if (status_[i] == Status::Unknown && !can_[i]) {
          status_[i] = Status::Absent;
          progress = true;
        }
      }
      if (!progress) {
        std::string names;
        for (std::size_t i = 0; i < status_.size(); ++i) {
          if (status_[i] == Status::Unknown) names += " " + prog_.signal(i).name;
        }
        throw CausalityError("causality cycle in '" + prog_.name() + "': cannot decide status of" + names);
      }
    }
  }

 private:
  Reaction finish(unsigned code) {
    ExecState next = state_;
    next.booted_ = true;
    std::sort(next_resume_.begin(), next_resume_.end());
    next_resume_.erase(std::unique(next_resume_.begin(), next_resume_.end()), next_resume_.end());
    next.resume_ = next_resume_;
    next.vars_ = store_;
    // Drop variables whose declaration is no longer live.
    for (std::size_t v = 0; v < next.vars_.size(); ++v) {
      if (!next.vars_[v]) continue;
      NodeId decl = prog_.variable_decl(static_cast<int>(v));
      if (!active_in(next.resume_, decl)) next.vars_[v].reset();
    }
    Reaction r{{}, {}, std::move(next), code == kTerm ? Completion::Terminated : Completion::Running};
    for (std::size_t i = 0; i < status_.size(); ++i) {
      if (status_[i] == Status::Unknown) status_[i] = Status::Absent;
      if (status_[i] != Status::Present) continue;
      const SignalDecl& d = prog_.signal(i);
      if (d.kind == SignalKind::Valued) r.next.values_[i] = instant_[i];
      if (d.direction == Direction::Output) r.outputs.emplace(d.name, instant_[i]);
      if (d.direction == Direction::Local) r.locals.emplace(d.name, instant_[i]);
    }
    return r;
  }

  bool active_in(const std::vector<NodeId>& resume, NodeId id) const {
    auto it = std::lower_bound(resume.begin(), resume.end(), id);
    return it != resume.end() && *it < nodes_[id].end;
  }
  bool active(NodeId id) const { return active_in(state_.resume_, id); }
  bool waiting_self(NodeId id) const {
    return std::binary_search(state_.resume_.begin(), state_.resume_.end(), id);
  }

  NodeId active_child(const FlatNode& n) const {
    for (NodeId c : n.children) {
      if (active(c)) return c;
    }
    throw KernelError("internal: resumed statement has no active child");
  }

  void emit(int s, std::optional<std::int64_t> value) {
    if (status_[s] == Status::Absent) {
      throw CausalityError("signal '" + prog_.signal(s).name + "' emitted after its absence was decided");
    }
    if (prog_.signal(s).kind == SignalKind::Valued) {
      if (instant_[s] && *instant_[s] != *value) {
        throw MultipleEmitConflict("signal '" + prog_.signal(s).name + "' emitted with values " +
                                   std::to_string(*instant_[s]) + " and " + std::to_string(*value));
      }
      instant_[s] = value;
    }
    if (status_[s] == Status::Unknown) {
      status_[s] = Status::Present;
      changed_ = true;
    }
  }

  // ---- must-execution --------------------------------------------------

  Value eval(int idx) const {
    const FlatExpr& e = exprs_[idx];
    switch (e.kind) {
      case ExprKind::Const:
        return {false, e.value};
      case ExprKind::Var:
        if (!store_[e.slot]) throw KernelError("variable '" + e.name + "' read outside its scope");
        return {false, *store_[e.slot]};
      case ExprKind::SignalValue:
        switch (status_[e.slot]) {
          case Status::Unknown:
            return {true, 0};
          case Status::Present:
            if (instant_[e.slot]) return {false, *instant_[e.slot]};
            return {true, 0};
          case Status::Absent:
            if (state_.values_[e.slot]) return {false, *state_.values_[e.slot]};
            throw KernelError("value of '" + e.name + "' read before any emission");
        }
        break;
      case ExprKind::SignalPresent:
        if (status_[e.slot] == Status::Unknown) return {true, 0};
        return {false, status_[e.slot] == Status::Present ? 1 : 0};
      case ExprKind::Not: {
        Value a = eval(e.lhs);
        return {a.blocked, a.v == 0 ? 1 : 0};
      }
      case ExprKind::Binary: {
        Value a = eval(e.lhs);
        if (!a.blocked && e.op == BinaryOp::And && a.v == 0) return {false, 0};
        if (!a.blocked && e.op == BinaryOp::Or && a.v != 0) return {false, 1};
        Value b = eval(e.rhs);
        if (!b.blocked && e.op == BinaryOp::And && b.v == 0) return {false, 0};
        if (!b.blocked && e.op == BinaryOp::Or && b.v != 0) return {false, 1};
        if (a.blocked || b.blocked) return {true, 0};
        return {false, apply(e.op, a.v, b.v)};
      }
    }
    return {true, 0};
  }

  unsigned exec(NodeId id, bool depth) {
    const FlatNode& n = nodes_[id];
    switch (n.kind) {
      case StmtKind::Nothing:
        return kTerm;

      case StmtKind::Pause:
        if (depth) return kTerm;
        next_resume_.push_back(id);
        return kPause;

      case StmtKind::Emit: {
        std::optional<std::int64_t> value;
        if (n.expr >= 0) {
          Value v = eval(n.expr);
          if (v.blocked) return kBlocked;
          value = v.v;
        }
        emit(n.signal, value);
        return kTerm;
      }

      case StmtKind::Assign: {
        Value v = eval(n.expr);
        if (v.blocked) return kBlocked;
        store_[n.var] = v.v;
        return kTerm;
      }

      case StmtKind::Await:
        if (!depth && !n.immediate) {
          next_resume_.push_back(id);
          return kPause;
        }
        switch (status_[n.signal]) {
          case Status::Present: return kTerm;
          case Status::Absent: next_resume_.push_back(id); return kPause;
          case Status::Unknown: return kBlocked;
        }
        return kBlocked;

      case StmtKind::Present: {
        if (depth) return exec(active_child(n), true);
        for (std::size_t i = 0; i < n.arm_signals.size(); ++i) {
          Status s = status_[n.arm_signals[i]];
          if (s == Status::Unknown) return kBlocked;
          if (s == Status::Present) return exec(n.children[i], false);
        }
        return n.has_else ? exec(n.children.back(), false) : kTerm;
      }

      case StmtKind::If: {
        if (depth) return exec(active_child(n), true);
        Value c = eval(n.expr);
        if (c.blocked) return kBlocked;
        if (c.v != 0) return exec(n.children[0], false);
        return n.has_else ? exec(n.children[1], false) : kTerm;
      }

      case StmtKind::Seq: {
        std::size_t i = 0;
        if (depth) {
          while (!active(n.children[i])) ++i;
          unsigned c = exec(n.children[i], true);
          if (c != kTerm) return c;
          ++i;
        }
        for (; i < n.children.size(); ++i) {
          unsigned c = exec(n.children[i], false);
          if (c != kTerm) return c;
        }
        return kTerm;
      }

      case StmtKind::Par: {
        bool blocked = false;
        bool paused = false;
        for (NodeId c : n.children) {
          if (depth && !active(c)) continue;
          unsigned r = exec(c, depth);
          blocked |= r == kBlocked;
          paused |= r == kPause;
        }
        return blocked ? kBlocked : paused ? kPause : kTerm;
      }

      case StmtKind::Loop: {
        NodeId body = n.children[0];
        unsigned c = exec(body, depth);
        if (c != kTerm) return c;
        if (!depth) throw KernelError("instantaneous loop");
        c = exec(body, false);
        if (c == kTerm) throw KernelError("instantaneous loop");
        return c;
      }

      case StmtKind::WeakAbort: {
        NodeId body = n.children[0];
        if (!depth) return exec(body, false);
        const std::size_t mark = next_resume_.size();
        unsigned c = exec(body, true);
        if (c != kPause) return c;
        switch (status_[n.signal]) {
          case Status::Present: next_resume_.resize(mark); return kTerm;
          case Status::Absent: return kPause;
          case Status::Unknown: return kBlocked;
        }
        return kBlocked;
      }

      case StmtKind::Abort: {
        NodeId body = n.children[0];
        if (!depth) return exec(body, false);
        switch (status_[n.signal]) {
          case Status::Present: return kTerm;
          case Status::Absent: return exec(body, true);
          case Status::Unknown: return kBlocked;
        }
        return kBlocked;
      }

      case StmtKind::EveryImmediate: {
        NodeId body = n.children[0];
        auto settle = [&](unsigned c) {
          if (c != kTerm) return c;
          next_resume_.push_back(id);
          return kPause;
        };
        switch (status_[n.signal]) {
          case Status::Unknown:
            return kBlocked;
          case Status::Present:
            return settle(exec(body, false));
          case Status::Absent:
            if (!depth || waiting_self(id)) {
              next_resume_.push_back(id);
              return kPause;
            }
            return settle(exec(body, true));
        }
        return kBlocked;
      }

      case StmtKind::VarDecl: {
        if (!depth) {
          Value v = eval(n.expr);
          if (v.blocked) return kBlocked;
          store_[n.var] = v.v;
        }
        unsigned c = exec(n.children[0], depth);
        if (c == kTerm) store_[n.var].reset();
        return c;
      }
    }
    return kBlocked;
  }

  // ---- may-execution ---------------------------------------------------

  std::optional<std::int64_t> eval_may(int idx, const AbstractStore& st) const {
    const FlatExpr& e = exprs_[idx];
    switch (e.kind) {
      case ExprKind::Const:
        return e.value;
      case ExprKind::Var:
        return st[e.slot];
      case ExprKind::SignalValue:
        if (status_[e.slot] == Status::Present) return instant_[e.slot];
        if (status_[e.slot] == Status::Absent) return state_.values_[e.slot];
        return std::nullopt;
      case ExprKind::SignalPresent:
        if (status_[e.slot] == Status::Unknown) return std::nullopt;
        return status_[e.slot] == Status::Present ? 1 : 0;
      case ExprKind::Not: {
        auto a = eval_may(e.lhs, st);
        if (!a) return std::nullopt;
        return *a == 0 ? 1 : 0;
      }
      case ExprKind::Binary: {
        auto a = eval_may(e.lhs, st);
        auto b = eval_may(e.rhs, st);
        if (e.op == BinaryOp::And && ((a && *a == 0) || (b && *b == 0))) return 0;
        if (e.op == BinaryOp::Or && ((a && *a != 0) || (b && *b != 0))) return 1;
        if (!a || !b) return std::nullopt;
        return apply(e.op, *a, *b);
      }
    }
    return std::nullopt;
  }

  // Runs child on a copy of st and joins the resulting store into acc.
  unsigned may_branch(NodeId child, bool depth, const AbstractStore& st, AbstractStore& acc,
                      bool& first) {
    AbstractStore copy = st;
    unsigned r = may(child, depth, copy);
    join_into(acc, copy, first);
    return r;
  }

  unsigned may(NodeId id, bool depth, AbstractStore& st) {
    const FlatNode& n = nodes_[id];
    switch (n.kind) {
      case StmtKind::Nothing:
        return kTerm;
      case StmtKind::Pause:
        return depth ? kTerm : kPause;
      case StmtKind::Emit:
        can_[n.signal] = true;
        return kTerm;
      case StmtKind::Assign:
        st[n.var] = eval_may(n.expr, st);
        return kTerm;

      case StmtKind::Await:
        if (!depth && !n.immediate) return kPause;
        switch (status_[n.signal]) {
          case Status::Present: return kTerm;
          case Status::Absent: return kPause;
          case Status::Unknown: return kTerm | kPause;
        }
        return kTerm | kPause;

      case StmtKind::Present: {
        if (depth) return may(active_child(n), true, st);
        unsigned r = 0;
        AbstractStore acc;
        bool first = true;
        for (std::size_t i = 0; i < n.arm_signals.size(); ++i) {
          Status s = status_[n.arm_signals[i]];
          if (s == Status::Absent) continue;
          r |= may_branch(n.children[i], false, st, acc, first);
          if (s == Status::Present) {
            st = std::move(acc);
            return r;
          }
        }
        if (n.has_else) {
          r |= may_branch(n.children.back(), false, st, acc, first);
        } else {
          r |= kTerm;
          join_into(acc, st, first);
        }
        st = std::move(acc);
        return r;
      }

      case StmtKind::If: {
        if (depth) return may(active_child(n), true, st);
        auto c = eval_may(n.expr, st);
        if (c) {
          if (*c != 0) return may(n.children[0], false, st);
          return n.has_else ? may(n.children[1], false, st) : kTerm;
        }
        AbstractStore acc;
        bool first = true;
        unsigned r = may_branch(n.children[0], false, st, acc, first);
        if (n.has_else) {
          r |= may_branch(n.children[1], false, st, acc, first);
        } else {
          r |= kTerm;
          join_into(acc, st, first);
        }
        st = std::move(acc);
        return r;
      }

      case StmtKind::Seq: {
        std::size_t i = 0;
        unsigned paused = 0;
        if (depth) {
          while (!active(n.children[i])) ++i;
          unsigned r = may(n.children[i], true, st);
          paused |= r & kPause;
          if (!(r & kTerm)) return paused;
          ++i;
        }
        for (; i < n.children.size(); ++i) {
          unsigned r = may(n.children[i], false, st);
          paused |= r & kPause;
          if (!(r & kTerm)) return paused;
        }
        return paused | kTerm;
      }

      case StmtKind::Par: {
        bool all_term = true;
        unsigned paused = 0;
        for (NodeId c : n.children) {
          if (depth && !active(c)) continue;
          unsigned r = may(c, depth, st);
          all_term &= (r & kTerm) != 0;
          paused |= r & kPause;
        }
        return paused | (all_term ? kTerm : 0);
      }

      case StmtKind::Loop: {
        NodeId body = n.children[0];
        unsigned r = may(body, depth, st);
        if (r & kTerm) may(body, false, st);
        return kPause;
      }

      case StmtKind::WeakAbort: {
        NodeId body = n.children[0];
        if (!depth) return may(body, false, st);
        unsigned r = may(body, true, st);
        if (!(r & kPause)) return r;
        switch (status_[n.signal]) {
          case Status::Present: return (r & ~kPause) | kTerm;
          case Status::Absent: return r;
          case Status::Unknown: return r | kTerm;
        }
        return r | kTerm;
      }

      case StmtKind::Abort: {
        NodeId body = n.children[0];
        if (!depth) return may(body, false, st);
        switch (status_[n.signal]) {
          case Status::Present: return kTerm;
          case Status::Absent: return may(body, true, st);
          case Status::Unknown: return may(body, true, st) | kTerm;
        }
        return kTerm | kPause;
      }

      case StmtKind::EveryImmediate: {
        NodeId body = n.children[0];
        Status s = status_[n.signal];
        AbstractStore acc;
        bool first = true;
        if (s != Status::Absent) may_branch(body, false, st, acc, first);
        if (s != Status::Present) {
          if (!depth || waiting_self(id)) {
            join_into(acc, st, first);
          } else {
            may_branch(body, true, st, acc, first);
          }
        }
        st = std::move(acc);
        return kPause;
      }

      case StmtKind::VarDecl:
        if (!depth) st[n.var] = eval_may(n.expr, st);
        return may(n.children[0], depth, st);
    }
    return kTerm | kPause;
  }

  const ExecState& state_;
  const Program& prog_;
  const std::vector<FlatNode>& nodes_;
  const std::vector<FlatExpr>& exprs_;

  std::vector<Status> status_;
  std::vector<std::optional<std::int64_t>> instant_;
  std::vector<std::optional<std::int64_t>> store_;
  std::vector<NodeId> next_resume_;
  std::vector<bool> can_;
  bool changed_ = false;
};

Reaction run_tick(const ExecState& state, const SignalSet& inputs) {
  return Reactor(state, inputs).react();
}

TraceResult run_trace(const ProgramPtr& program, const std::vector<SignalSet>& trace) {
  TraceResult result;
  ExecState state = ExecState::initial(program);
  for (std::size_t t = 0; t < trace.size(); ++t) {
    try {
      Reaction r = run_tick(state, trace[t]);
      result.outputs.push_back(std::move(r.outputs));
      state = std::move(r.next);
      if (r.completion == Completion::Terminated) {
        result.terminated = true;
        result.terminated_at = t;
        break;
      }
    } catch (KernelError& e) {
      e.set_tick(t);
      throw;
    }
  }
  return result;
}

}  // namespace scc::kernel
