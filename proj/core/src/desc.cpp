#include "binderkit/desc.hpp"

#include "binderkit/result.hpp"

namespace binderkit {

struct Desc::Node {
  Kind kind;
  // Sigma
  std::optional<PayloadDomain> domain;
  std::function<Desc(const PayloadValue&)> rest_fn;
  // Rec
  std::vector<Sort> telescope;
  std::optional<Sort> rec_sort;
  std::shared_ptr<const Node> rest;
  // Done
  std::optional<Sort> done_sort;
};

Desc Desc::sigma(PayloadDomain domain, std::function<Desc(const PayloadValue&)> rest) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sigma;
  n->domain = std::move(domain);
  n->rest_fn = std::move(rest);
  return Desc(std::move(n));
}

Desc Desc::rec(std::vector<Sort> telescope, Sort sort, Desc rest) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Rec;
  n->telescope = std::move(telescope);
  n->rec_sort = std::move(sort);
  n->rest = std::move(rest.n_);
  return Desc(std::move(n));
}

Desc Desc::done(Sort sort) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Done;
  n->done_sort = std::move(sort);
  return Desc(std::move(n));
}

Desc::Kind Desc::kind() const { return n_->kind; }

const PayloadDomain& Desc::domain() const {
  if (n_->kind != Kind::Sigma) throw Error("Desc::domain on non-sigma node");
  return *n_->domain;
}

Desc Desc::apply(const PayloadValue& payload) const {
  if (n_->kind != Kind::Sigma) throw Error("Desc::apply on non-sigma node");
  if (!n_->domain->admits(payload))
    throw Error("Desc::apply: payload " + payload.show() + " outside domain " +
                n_->domain->show());
  return n_->rest_fn(payload);
}

const std::vector<Sort>& Desc::telescope() const {
  if (n_->kind != Kind::Rec) throw Error("Desc::telescope on non-rec node");
  return n_->telescope;
}

const Sort& Desc::rec_sort() const {
  if (n_->kind != Kind::Rec) throw Error("Desc::rec_sort on non-rec node");
  return *n_->rec_sort;
}

Desc Desc::rest() const {
  if (n_->kind != Kind::Rec) throw Error("Desc::rest on non-rec node");
  return Desc(n_->rest);
}

const Sort& Desc::done_sort() const {
  if (n_->kind != Kind::Done) throw Error("Desc::done_sort on non-done node");
  return *n_->done_sort;
}

Desc sum(const Desc& left, const Desc& right) {
  return Desc::sigma(PayloadDomain::boolean(), [left, right](const PayloadValue& pick) {
    return pick.as_bool() ? left : right;
  });
}

namespace {

void explore_from(const Desc& d, const EnumerationHints& hints, std::size_t steps_left,
                  DescPath prefix, std::vector<DescPath>& out) {
  if (steps_left == 0) throw Error("explore: description path exceeded the step bound");
  switch (d.kind()) {
    case Desc::Kind::Done: {
      prefix.done = d.done_sort();
      out.push_back(std::move(prefix));
      return;
    }
    case Desc::Kind::Rec: {
      prefix.recs.emplace_back(d.telescope(), d.rec_sort());
      explore_from(d.rest(), hints, steps_left - 1, std::move(prefix), out);
      return;
    }
    case Desc::Kind::Sigma: {
      for (const auto& p : enumerate_payloads(d.domain(), hints)) {
        DescPath next = prefix;
        next.payloads.push_back(p);
        explore_from(d.apply(p), hints, steps_left - 1, next, out);
      }
      return;
    }
  }
}

}  // namespace

std::vector<DescPath> explore(const Desc& d, const EnumerationHints& hints,
                              std::size_t max_steps) {
  std::vector<DescPath> out;
  explore_from(d, hints, max_steps, DescPath{{}, {}, Sort::unit()}, out);
  return out;
}

}  // namespace binderkit
