#include "binderkit/gen.hpp"

#include <map>

namespace binderkit {

namespace {

struct GenState {
  const Syntax& syntax;
  std::vector<DescPath> paths;  // all constructor shapes, payloads enumerated
  std::map<std::string, bool> feasible_memo;
};

std::string memo_key(const Ctx& ctx, const Sort& sort, std::size_t depth) {
  return ctx.show() + "|" + sort.show() + "|" + std::to_string(depth);
}

bool feasible(GenState& st, const Ctx& ctx, const Sort& sort, std::size_t depth);

bool path_feasible(GenState& st, const DescPath& path, const Ctx& ctx, std::size_t depth) {
  for (const auto& [telescope, sort] : path.recs)
    if (!feasible(st, ctx.extended(telescope), sort, depth - 1)) return false;
  return true;
}

bool feasible(GenState& st, const Ctx& ctx, const Sort& sort, std::size_t depth) {
  if (depth == 0) return false;
  std::string key = memo_key(ctx, sort, depth);
  auto it = st.feasible_memo.find(key);
  if (it != st.feasible_memo.end()) return it->second;
  st.feasible_memo[key] = false;  // cut off cycles pessimistically
  bool ok = false;
  for (std::size_t i = 0; i < ctx.size() && !ok; ++i)
    if (ctx[i] == sort) ok = true;
  for (const auto& path : st.paths) {
    if (ok) break;
    if (!(path.done == sort)) continue;
    if (depth == 1 && !path.recs.empty()) continue;
    ok = path_feasible(st, path, ctx, depth);
  }
  st.feasible_memo[key] = ok;
  return ok;
}

Term gen_at(GenState& st, Rng& rng, const Ctx& ctx, const Sort& sort, std::size_t depth) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (ctx[i] == sort) vars.push_back(i);

  std::vector<const DescPath*> options;
  for (const auto& path : st.paths) {
    if (!(path.done == sort)) continue;
    if (depth == 1 && !path.recs.empty()) continue;
    if (path_feasible(st, path, ctx, depth)) options.push_back(&path);
  }

  // keep roughly a third of the picks on variables so terms grow structure
  bool pick_var = !vars.empty() && (options.empty() || rng.coin(1, 3));
  if (pick_var) {
    std::size_t i = vars[rng.below(vars.size())];
    return Term::var(Var{i, sort});
  }
  if (options.empty())
    throw Error("gen_at: no option at a point feasibility promised one");

  const DescPath& path = *options[rng.below(options.size())];
  Layer<Term> layer;
  std::size_t pay = 0, rec = 0;
  // replay the path to interleave payload and substructure events in the
  // description's order
  Desc cursor = st.syntax.desc;
  while (cursor.kind() != Desc::Kind::Done) {
    if (cursor.kind() == Desc::Kind::Sigma) {
      const PayloadValue& p = path.payloads[pay++];
      layer.events.emplace_back(p);
      cursor = cursor.apply(p);
    } else {
      const auto& [telescope, sub_sort] = path.recs[rec++];
      Term child = gen_at(st, rng, ctx.extended(telescope), sub_sort, depth - 1);
      layer.events.emplace_back(SubEvent<Term>{telescope, sub_sort, std::move(child)});
      cursor = cursor.rest();
    }
  }
  return Term::con(std::move(layer));
}

}  // namespace

Result<Term, UnsatisfiableSort> gen_term(const Syntax& syntax, Rng& rng, const Ctx& ctx,
                                         const Sort& sort, std::size_t max_depth) {
  if (max_depth == 0)
    return Result<Term, UnsatisfiableSort>::err(UnsatisfiableSort{"max_depth must be >= 1"});
  GenState st{syntax, explore(syntax.desc, syntax.hints), {}};
  if (!feasible(st, ctx, sort, max_depth))
    return Result<Term, UnsatisfiableSort>::err(UnsatisfiableSort{
        "no constructor path nor variable can produce sort " + sort.show() + " in context " +
        ctx.show() + " within depth " + std::to_string(max_depth)});
  return Result<Term, UnsatisfiableSort>::ok(gen_at(st, rng, ctx, sort, max_depth));
}

Result<Term, UnsatisfiableSort> gen_term(const Syntax& syntax, const GenConfig& config) {
  Rng rng(config.seed);
  return gen_term(syntax, rng, config.context, config.sort, config.max_depth);
}

}  // namespace binderkit
