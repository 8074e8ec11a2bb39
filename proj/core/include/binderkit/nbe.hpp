#ifndef BINDERKIT_NBE_HPP
#define BINDERKIT_NBE_HPP

#include <optional>

#include "binderkit/syntactic.hpp"

namespace binderkit {

/// The reflexive domain: a free variable, a constructor's counterpart
/// whose scopes have become Kripke spaces on the domain itself, or an
/// error token for evaluation gone wrong.
class Dm {
 public:
  static Dm var(Var v);
  static Dm con(Layer<Kripke<Dm, Dm>> layer);
  static Dm bot();

  enum class Kind { Var, Con, Bot };
  Kind kind() const;
  const Var& as_var() const;
  const Layer<Kripke<Dm, Dm>>& layer() const;

 private:
  struct Node;
  explicit Dm(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

Dm th_dm(const Dm& v, const Thinning& th);
VarLike<Dm> vl_dm();

using DmAlg = std::function<Dm(const Sort&, const Layer<Kripke<Dm, Dm>>&)>;

/// Evaluation into the reflexive domain. May diverge on non-normalising
/// terms; that is the contract, not a bug to guard against here.
Dm nbe(const Desc& d, const DmAlg& alg, const Env<Dm>& rho, const Sort& sort, const Term& t);

/// Potentially failing reification out of the domain: an error token has
/// no syntactic counterpart.
std::optional<Term> reify_dm(const Desc& d, const Dm& v, const Ctx& ctx, const Sort& sort);

/// Applies a semantic function to a semantic argument by feeding the
/// Kripke body a singleton environment.
Dm app_dm(const Dm& fn, const Dm& arg);

/// The untyped λ-calculus algebra: β-reduce when an application's head is
/// a lambda, rebuild the stuck node otherwise.
Dm utlc_alg(const Sort& sort, const Layer<Kripke<Dm, Dm>>& layer);

/// Evaluation followed by reification; `ctx` defaults to the empty scope.
std::optional<Term> norm(const Desc& d, const DmAlg& alg, const Term& t, const Ctx& ctx = Ctx());

}  // namespace binderkit

#endif
