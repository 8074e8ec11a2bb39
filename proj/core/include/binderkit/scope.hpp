#ifndef BINDERKIT_SCOPE_HPP
#define BINDERKIT_SCOPE_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "binderkit/result.hpp"
#include "binderkit/sorts.hpp"

namespace binderkit {

/// A scope: the sorts of the variables currently bound, innermost first
/// (index 0 is the nearest binder).
class Ctx {
 public:
  Ctx() : sorts_(std::make_shared<std::vector<Sort>>()) {}
  explicit Ctx(std::vector<Sort> sorts)
      : sorts_(std::make_shared<std::vector<Sort>>(std::move(sorts))) {}

  std::size_t size() const { return sorts_->size(); }
  bool empty() const { return sorts_->empty(); }
  const Sort& operator[](std::size_t i) const { return (*sorts_)[i]; }

  /// telescope ++ this, telescope entry 0 becoming the new index 0.
  Ctx extended(const std::vector<Sort>& telescope) const {
    std::vector<Sort> out(telescope.begin(), telescope.end());
    out.insert(out.end(), sorts_->begin(), sorts_->end());
    return Ctx(std::move(out));
  }

  bool operator==(const Ctx& other) const {
    if (sorts_ == other.sorts_) return true;
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (!((*this)[i] == other[i])) return false;
    return true;
  }
  bool operator!=(const Ctx& other) const { return !(*this == other); }

  std::string show() const {
    std::string out = "[";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ", ";
      out += (*this)[i].show();
    }
    return out + "]";
  }

 private:
  std::shared_ptr<const std::vector<Sort>> sorts_;
};

/// A well sorted de Bruijn index: position plus the sort it claims.
struct Var {
  std::size_t index;
  Sort sort;

  bool operator==(const Var& other) const {
    return index == other.index && sort == other.sort;
  }
  bool operator!=(const Var& other) const { return !(*this == other); }

  std::string show() const { return "#" + std::to_string(index) + ":" + sort.show(); }
};

inline bool var_valid_in(const Var& v, const Ctx& ctx) {
  return v.index < ctx.size() && ctx[v.index] == v.sort;
}

inline void require_var(const Var& v, const Ctx& ctx) {
  if (v.index >= ctx.size())
    throw Error("variable " + v.show() + " out of range for context " + ctx.show());
  if (!(ctx[v.index] == v.sort))
    throw Error("variable " + v.show() + " has wrong sort for context " + ctx.show());
}

/// A total assignment of target-scope values to every variable of a source
/// scope. Kept functional; laws about environments are checked
/// extensionally on all valid variables.
template <typename V>
class Env {
 public:
  Env(Ctx source, Ctx target, std::function<V(const Var&)> lookup)
      : src_(std::move(source)), tgt_(std::move(target)), fn_(std::move(lookup)) {}

  static Env empty(Ctx target) {
    return Env(Ctx(), std::move(target),
               [](const Var& v) -> V { throw Error("lookup in empty environment: " + v.show()); });
  }

  static Env from_values(Ctx source, Ctx target, std::vector<V> values) {
    if (values.size() != source.size())
      throw Error("Env::from_values: entry count does not match source context");
    auto vals = std::make_shared<std::vector<V>>(std::move(values));
    return Env(std::move(source), std::move(target),
               [vals](const Var& v) { return (*vals)[v.index]; });
  }

  const Ctx& source() const { return src_; }
  const Ctx& target() const { return tgt_; }

  V lookup(const Var& v) const {
    require_var(v, src_);
    return fn_(v);
  }

  /// Extends the source scope with a new innermost entry of sort `s`.
  Env snoc(Sort s, V value) const {
    Env prev = *this;
    Ctx src = src_.extended({s});
    return Env(std::move(src), tgt_, [prev, value](const Var& v) -> V {
      if (v.index == 0) return value;
      return prev.fn_(Var{v.index - 1, v.sort});
    });
  }

  template <typename F>
  auto map(F f) const -> Env<decltype(f(std::declval<V>()))> {
    using W = decltype(f(std::declval<V>()));
    Env prev = *this;
    return Env<W>(src_, tgt_, [prev, f](const Var& v) { return f(prev.fn_(v)); });
  }

  /// Raw lookup without validity checks; internal plumbing for combinators
  /// that have already checked their indices.
  V unchecked(const Var& v) const { return fn_(v); }

 private:
  Ctx src_, tgt_;
  std::function<V(const Var&)> fn_;
};

/// Joins an outer environment with one covering a telescope that has just
/// been pushed on top of the scope: the first |inner| indices resolve in
/// `inner`, the rest in `outer` (shifted).
template <typename V>
Env<V> append(const Env<V>& outer, const Env<V>& inner) {
  if (outer.target() != inner.target())
    throw Error("append: environments disagree on the target context");
  std::vector<Sort> tele;
  for (std::size_t i = 0; i < inner.source().size(); ++i) tele.push_back(inner.source()[i]);
  Ctx src = outer.source().extended(tele);
  std::size_t cut = inner.source().size();
  return Env<V>(std::move(src), outer.target(), [outer, inner, cut](const Var& v) -> V {
    if (v.index < cut) return inner.unchecked(v);
    return outer.unchecked(Var{v.index - cut, v.sort});
  });
}

/// A sort-preserving map between scopes; renamings, weakenings and
/// permutations all live here.
using Thinning = Env<Var>;

inline Thinning identity_thinning(const Ctx& ctx) {
  return Thinning(ctx, ctx, [](const Var& v) { return v; });
}

/// The embedding of ctx into sort∷ctx: every index shifts by one.
inline Thinning weaken(const Sort& sort, const Ctx& ctx) {
  return Thinning(ctx, ctx.extended({sort}),
                  [](const Var& v) { return Var{v.index + 1, v.sort}; });
}

/// The embedding of ctx into telescope++ctx: indices shift by |telescope|.
inline Thinning weaken_many(const std::vector<Sort>& telescope, const Ctx& ctx) {
  std::size_t shift = telescope.size();
  return Thinning(ctx, ctx.extended(telescope),
                  [shift](const Var& v) { return Var{v.index + shift, v.sort}; });
}

/// Generalised transitivity: look up through the thinning first.
template <typename V>
Env<V> select(const Thinning& th, const Env<V>& rho) {
  if (th.target() != rho.source())
    throw Error("select: thinning target does not match environment source");
  return Env<V>(th.source(), rho.target(),
                [th, rho](const Var& v) { return rho.unchecked(th.unchecked(v)); });
}

/// Pushes an environment along a thinning of its target scope, given the
/// value family's own thinning action.
template <typename V, typename F>
Env<V> thin_env(F th_v, const Env<V>& rho, const Thinning& th) {
  if (rho.target() != th.source())
    throw Error("thin_env: environment target does not match thinning source");
  return Env<V>(rho.source(), th.target(),
                [th_v, rho, th](const Var& v) { return th_v(rho.unchecked(v), th); });
}

/// A scoped value that can absorb any thinning of its home scope.
template <typename T>
struct Box {
  Ctx home;
  std::function<T(const Thinning&)> at;
};

template <typename T>
T extract(const Box<T>& b) {
  return b.at(identity_thinning(b.home));
}

template <typename T>
Box<T> th_box(const Box<T>& b, const Thinning& rho) {
  if (rho.source() != b.home) throw Error("th_box: thinning source does not match home scope");
  return Box<T>{rho.target(), [b, rho](const Thinning& sigma) { return b.at(select(rho, sigma)); }};
}

template <typename T>
Box<Box<T>> duplicate(const Box<T>& b) {
  return Box<Box<T>>{b.home, [b](const Thinning& rho) { return th_box(b, rho); }};
}

/// The semantic interpretation of one binder: either the subcomputation
/// itself (no variables were bound) or a function awaiting, in any
/// extension of the home scope, values for the newly bound variables.
template <typename V, typename C>
class Kripke {
 public:
  static Kripke leaf(Ctx home, C value) {
    Kripke k;
    k.home_ = std::move(home);
    k.leaf_ = std::make_shared<C>(std::move(value));
    return k;
  }

  static Kripke binder(Ctx home, std::function<C(const Thinning&, const Env<V>&)> run) {
    Kripke k;
    k.home_ = std::move(home);
    k.run_ = std::move(run);
    return k;
  }

  bool is_leaf() const { return leaf_ != nullptr; }
  const Ctx& home() const { return home_; }

  const C& value() const {
    if (!leaf_) throw Error("Kripke::value on a binder");
    return *leaf_;
  }

  C run(const Thinning& th, const Env<V>& values) const {
    if (leaf_) throw Error("Kripke::run on a leaf");
    return run_(th, values);
  }

 private:
  Ctx home_;
  std::shared_ptr<C> leaf_;
  std::function<C(const Thinning&, const Env<V>&)> run_;
};

/// Value families that can be thinned and can produce a placeholder for a
/// freshly bound variable; enough structure to reify semantic binders.
template <typename V>
struct VarLike {
  std::function<V(const V&, const Thinning&)> thin;
  /// Placeholder for the newest variable: `ctx` is nonempty and its head
  /// has the given sort.
  std::function<V(const Sort&, const Ctx&)> fresh;
};

/// The environment mapping each variable of ctx to its own placeholder.
template <typename V>
Env<V> base(const VarLike<V>& vl, const Ctx& ctx) {
  std::vector<V> values;
  // entry i is the placeholder for the scope suffix starting at i, thinned
  // back under the i binders in front of it
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    std::vector<Sort> suffix;
    for (std::size_t j = i; j < ctx.size(); ++j) suffix.push_back(ctx[j]);
    V v = vl.fresh(ctx[i], Ctx(suffix));
    for (std::size_t k = i; k-- > 0;) {
      std::vector<Sort> below;
      for (std::size_t j = k + 1; j < ctx.size(); ++j) below.push_back(ctx[j]);
      v = vl.thin(v, weaken(ctx[k], Ctx(below)));
    }
    values.push_back(std::move(v));
  }
  return Env<V>::from_values(ctx, ctx, std::move(values));
}

/// base, pushed under `telescope` fresh binders: the right injection.
template <typename V>
Env<V> fresh_r(const VarLike<V>& vl, const Ctx& ctx, const std::vector<Sort>& telescope) {
  return thin_env(vl.thin, base(vl, ctx), weaken_many(telescope, ctx));
}

/// base, targeting a scope extended on the outside: the left injection.
template <typename V>
Env<V> fresh_l(const VarLike<V>& vl, const Ctx& ctx, const std::vector<Sort>& outer) {
  std::vector<Sort> rest;
  for (std::size_t i = 0; i < ctx.size(); ++i) rest.push_back(ctx[i]);
  Ctx target = Ctx(outer).extended(rest);
  Thinning inject(ctx, target, [](const Var& v) { return v; });
  return thin_env(vl.thin, base(vl, ctx), inject);
}

}  // namespace binderkit

#endif
