#ifndef BINDERKIT_SYNTACTIC_HPP
#define BINDERKIT_SYNTACTIC_HPP

#include "binderkit/semantics.hpp"

namespace binderkit {

/// Variables are the canonical VarLike family: thinning is lookup, the
/// placeholder for a fresh binder is index 0.
VarLike<Var> vl_var();

/// Terms of `d` are VarLike too: thinning is renaming, placeholders are
/// wrapped variables.
VarLike<Term> vl_tm(const Desc& d);

/// Renaming as a semantics with variables as values and terms as
/// computations.
SemanticsDef<Var, Term> ren_semantics(const Desc& d);
Term ren(const Desc& d, const Thinning& th, const Term& t);

/// Substitution: terms as both values and computations. Its thinning
/// action is renaming, so the two traversals share one code path and the
/// fusion checks are about the real thing.
SemanticsDef<Term, Term> sub_semantics(const Desc& d);
Term sub(const Desc& d, const Env<Term>& rho, const Term& t);

}  // namespace binderkit

#endif
