#include "binderkit/payload.hpp"

#include <set>
#include <utility>

#include "binderkit/result.hpp"

namespace binderkit {

struct PayloadDomain::Node {
  Kind kind;
  std::vector<std::string> labels;
  std::shared_ptr<const Node> first;
  std::shared_ptr<const Node> second;
};

PayloadDomain PayloadDomain::boolean() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Bool, {}, nullptr, nullptr});
  return PayloadDomain(n);
}

PayloadDomain PayloadDomain::nat() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Nat, {}, nullptr, nullptr});
  return PayloadDomain(n);
}

PayloadDomain PayloadDomain::text() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Text, {}, nullptr, nullptr});
  return PayloadDomain(n);
}

PayloadDomain PayloadDomain::sort() {
  static const auto n = std::make_shared<const Node>(Node{Kind::SortD, {}, nullptr, nullptr});
  return PayloadDomain(n);
}

PayloadDomain PayloadDomain::tag(std::vector<std::string> labels) {
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) throw Error("PayloadDomain::tag: labels must be distinct");
  return PayloadDomain(
      std::make_shared<const Node>(Node{Kind::Tag, std::move(labels), nullptr, nullptr}));
}

PayloadDomain PayloadDomain::pair(PayloadDomain first, PayloadDomain second) {
  return PayloadDomain(std::make_shared<const Node>(
      Node{Kind::Pair, {}, std::move(first.n_), std::move(second.n_)}));
}

PayloadDomain::Kind PayloadDomain::kind() const { return n_->kind; }

const std::vector<std::string>& PayloadDomain::labels() const {
  if (n_->kind != Kind::Tag) throw Error("PayloadDomain::labels on non-tag");
  return n_->labels;
}

PayloadDomain PayloadDomain::first() const {
  if (n_->kind != Kind::Pair) throw Error("PayloadDomain::first on non-pair");
  return PayloadDomain(n_->first);
}

PayloadDomain PayloadDomain::second() const {
  if (n_->kind != Kind::Pair) throw Error("PayloadDomain::second on non-pair");
  return PayloadDomain(n_->second);
}

std::string PayloadDomain::show() const {
  switch (n_->kind) {
    case Kind::Bool: return "bool";
    case Kind::Nat: return "nat";
    case Kind::Text: return "text";
    case Kind::SortD: return "sort";
    case Kind::Tag: {
      std::string out = "tag{";
      for (std::size_t i = 0; i < n_->labels.size(); ++i) {
        if (i) out += ",";
        out += n_->labels[i];
      }
      return out + "}";
    }
    case Kind::Pair: return "(pair " + first().show() + " " + second().show() + ")";
  }
  return "?";
}

struct PayloadValue::Node {
  Kind kind;
  bool b = false;
  std::uint64_t n = 0;
  std::string text;
  std::optional<Sort> sort;
  std::size_t tag_index = 0;
  std::shared_ptr<const Node> first;
  std::shared_ptr<const Node> second;
};

PayloadValue PayloadValue::boolean(bool b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bool;
  n->b = b;
  return PayloadValue(std::move(n));
}

PayloadValue PayloadValue::nat(std::uint64_t v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Nat;
  n->n = v;
  return PayloadValue(std::move(n));
}

PayloadValue PayloadValue::text(std::string s) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Text;
  n->text = std::move(s);
  return PayloadValue(std::move(n));
}

PayloadValue PayloadValue::sort(Sort s) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::SortV;
  n->sort = std::move(s);
  return PayloadValue(std::move(n));
}

PayloadValue PayloadValue::tag(std::size_t index, std::string label) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tag;
  n->tag_index = index;
  n->text = std::move(label);
  return PayloadValue(std::move(n));
}

PayloadValue PayloadValue::pair(PayloadValue first, PayloadValue second) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pair;
  n->first = std::move(first.n_);
  n->second = std::move(second.n_);
  return PayloadValue(std::move(n));
}

PayloadValue::Kind PayloadValue::kind() const { return n_->kind; }

bool PayloadValue::as_bool() const {
  if (n_->kind != Kind::Bool) throw Error("PayloadValue::as_bool");
  return n_->b;
}

std::uint64_t PayloadValue::as_nat() const {
  if (n_->kind != Kind::Nat) throw Error("PayloadValue::as_nat");
  return n_->n;
}

const std::string& PayloadValue::as_text() const {
  if (n_->kind != Kind::Text) throw Error("PayloadValue::as_text");
  return n_->text;
}

const Sort& PayloadValue::as_sort() const {
  if (n_->kind != Kind::SortV) throw Error("PayloadValue::as_sort");
  return *n_->sort;
}

std::size_t PayloadValue::tag_index() const {
  if (n_->kind != Kind::Tag) throw Error("PayloadValue::tag_index");
  return n_->tag_index;
}

const std::string& PayloadValue::tag_label() const {
  if (n_->kind != Kind::Tag) throw Error("PayloadValue::tag_label");
  return n_->text;
}

PayloadValue PayloadValue::first() const {
  if (n_->kind != Kind::Pair) throw Error("PayloadValue::first on non-pair");
  return PayloadValue(n_->first);
}

PayloadValue PayloadValue::second() const {
  if (n_->kind != Kind::Pair) throw Error("PayloadValue::second on non-pair");
  return PayloadValue(n_->second);
}

bool PayloadValue::operator==(const PayloadValue& other) const {
  if (n_ == other.n_) return true;
  if (n_->kind != other.n_->kind) return false;
  switch (n_->kind) {
    case Kind::Bool: return n_->b == other.n_->b;
    case Kind::Nat: return n_->n == other.n_->n;
    case Kind::Text: return n_->text == other.n_->text;
    case Kind::SortV: return *n_->sort == *other.n_->sort;
    case Kind::Tag: return n_->tag_index == other.n_->tag_index && n_->text == other.n_->text;
    case Kind::Pair:
      return PayloadValue(n_->first) == PayloadValue(other.n_->first) &&
             PayloadValue(n_->second) == PayloadValue(other.n_->second);
  }
  return false;
}

std::string PayloadValue::show() const {
  switch (n_->kind) {
    case Kind::Bool: return n_->b ? "true" : "false";
    case Kind::Nat: return std::to_string(n_->n);
    case Kind::Text: return "\"" + n_->text + "\"";
    case Kind::SortV: return n_->sort->show();
    case Kind::Tag: return n_->text;
    case Kind::Pair:
      return "(" + PayloadValue(n_->first).show() + ", " + PayloadValue(n_->second).show() + ")";
  }
  return "?";
}

bool PayloadDomain::admits(const PayloadValue& v) const {
  switch (n_->kind) {
    case Kind::Bool: return v.kind() == PayloadValue::Kind::Bool;
    case Kind::Nat: return v.kind() == PayloadValue::Kind::Nat;
    case Kind::Text: return v.kind() == PayloadValue::Kind::Text;
    case Kind::SortD: return v.kind() == PayloadValue::Kind::SortV;
    case Kind::Tag:
      return v.kind() == PayloadValue::Kind::Tag && v.tag_index() < n_->labels.size() &&
             n_->labels[v.tag_index()] == v.tag_label();
    case Kind::Pair:
      return v.kind() == PayloadValue::Kind::Pair && first().admits(v.first()) &&
             second().admits(v.second());
  }
  return false;
}

bool payload_eq(const PayloadDomain& domain, const PayloadValue& a, const PayloadValue& b) {
  if (!domain.admits(a) || !domain.admits(b))
    throw Error("payload_eq: value does not inhabit domain " + domain.show());
  if (domain.kind() == PayloadDomain::Kind::Pair)
    return payload_eq(domain.first(), a.first(), b.first()) &&
           payload_eq(domain.second(), a.second(), b.second());
  return a == b;
}

std::vector<PayloadValue> enumerate_payloads(const PayloadDomain& domain,
                                             const EnumerationHints& hints) {
  std::vector<PayloadValue> out;
  switch (domain.kind()) {
    case PayloadDomain::Kind::Bool:
      out = {PayloadValue::boolean(true), PayloadValue::boolean(false)};
      break;
    case PayloadDomain::Kind::Nat:
      for (std::uint64_t i = 0; i <= hints.nat_bound; ++i) out.push_back(PayloadValue::nat(i));
      break;
    case PayloadDomain::Kind::Text:
      for (const auto& t : hints.texts) out.push_back(PayloadValue::text(t));
      break;
    case PayloadDomain::Kind::SortD:
      for (const auto& s : hints.sorts) out.push_back(PayloadValue::sort(s));
      break;
    case PayloadDomain::Kind::Tag:
      for (std::size_t i = 0; i < domain.labels().size(); ++i)
        out.push_back(PayloadValue::tag(i, domain.labels()[i]));
      break;
    case PayloadDomain::Kind::Pair:
      for (const auto& a : enumerate_payloads(domain.first(), hints))
        for (const auto& b : enumerate_payloads(domain.second(), hints))
          out.push_back(PayloadValue::pair(a, b));
      break;
  }
  return out;
}

}  // namespace binderkit
