#include "binderkit/sorts.hpp"

#include <algorithm>

#include "binderkit/result.hpp"

namespace binderkit {

struct SimpleType::Node {
  bool arrow;
  std::optional<SimpleType> dom;
  std::optional<SimpleType> cod;
};

SimpleType SimpleType::alpha() {
  static const auto node = std::make_shared<const Node>(Node{false, {}, {}});
  return SimpleType(node);
}

SimpleType SimpleType::arrow(SimpleType dom, SimpleType cod) {
  return SimpleType(std::make_shared<const Node>(Node{true, std::move(dom), std::move(cod)}));
}

bool SimpleType::is_arrow() const { return n_->arrow; }

const SimpleType& SimpleType::dom() const {
  if (!n_->arrow) throw Error("SimpleType::dom on alpha");
  return *n_->dom;
}

const SimpleType& SimpleType::cod() const {
  if (!n_->arrow) throw Error("SimpleType::cod on alpha");
  return *n_->cod;
}

bool SimpleType::operator==(const SimpleType& other) const {
  if (n_ == other.n_) return true;
  if (n_->arrow != other.n_->arrow) return false;
  if (!n_->arrow) return true;
  return dom() == other.dom() && cod() == other.cod();
}

std::size_t SimpleType::node_count() const {
  if (!n_->arrow) return 1;
  return 1 + dom().node_count() + cod().node_count();
}

std::string SimpleType::show() const {
  if (!n_->arrow) return "alpha";
  return "(-> " + dom().show() + " " + cod().show() + ")";
}

Sort Sort::unit() { return Sort(Kind::Unit, {}); }
Sort Sort::infer() { return Sort(Kind::Infer, {}); }
Sort Sort::check() { return Sort(Kind::Check, {}); }
Sort Sort::of_type(SimpleType t) { return Sort(Kind::Type, std::move(t)); }

const SimpleType& Sort::type() const {
  if (kind_ != Kind::Type) throw Error("Sort::type on non-type sort");
  return *type_;
}

bool Sort::operator==(const Sort& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ != Kind::Type) return true;
  return *type_ == *other.type_;
}

std::string Sort::show() const {
  switch (kind_) {
    case Kind::Unit: return "*";
    case Kind::Infer: return "Infer";
    case Kind::Check: return "Check";
    case Kind::Type: return type_->show();
  }
  return "?";
}

std::vector<SimpleType> enumerate_types(std::size_t bound) {
  // by_size[n] holds every type with exactly n nodes
  std::vector<std::vector<SimpleType>> by_size(bound + 1);
  std::vector<SimpleType> all;
  for (std::size_t n = 1; n <= bound; ++n) {
    if (n == 1) {
      by_size[1].push_back(SimpleType::alpha());
    } else {
      for (std::size_t d = 1; d + 2 <= n; ++d) {
        std::size_t c = n - 1 - d;
        for (const auto& dom : by_size[d])
          for (const auto& cod : by_size[c])
            by_size[n].push_back(SimpleType::arrow(dom, cod));
      }
    }
    for (const auto& t : by_size[n]) all.push_back(t);
  }
  return all;
}

namespace {

std::optional<Sort> decode_type_sort(const std::string& text);

SortDomain make_unit_domain() {
  SortDomain d;
  d.name = "unit";
  d.eq = [](const Sort& a, const Sort& b) { return a == b; };
  d.encode = [](const Sort& s) { return s.show(); };
  d.decode = [](const std::string& text) -> std::optional<Sort> {
    if (text == "*") return Sort::unit();
    return std::nullopt;
  };
  d.enumerate = [](std::size_t) { return std::vector<Sort>{Sort::unit()}; };
  return d;
}

SortDomain make_mode_domain() {
  SortDomain d;
  d.name = "mode";
  d.eq = [](const Sort& a, const Sort& b) { return a == b; };
  d.encode = [](const Sort& s) { return s.show(); };
  d.decode = [](const std::string& text) -> std::optional<Sort> {
    if (text == "Infer") return Sort::infer();
    if (text == "Check") return Sort::check();
    return std::nullopt;
  };
  d.enumerate = [](std::size_t) { return std::vector<Sort>{Sort::infer(), Sort::check()}; };
  return d;
}

// Tiny recursive-descent reader for the "alpha" / "(-> t t)" notation.
struct TypeReader {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool eat(const std::string& word) {
    skip();
    if (s.compare(pos, word.size(), word) == 0) {
      pos += word.size();
      return true;
    }
    return false;
  }
  std::optional<SimpleType> type() {
    skip();
    if (eat("alpha")) return SimpleType::alpha();
    if (eat("(")) {
      if (!eat("->")) return std::nullopt;
      auto dom = type();
      if (!dom) return std::nullopt;
      auto cod = type();
      if (!cod) return std::nullopt;
      if (!eat(")")) return std::nullopt;
      return SimpleType::arrow(*dom, *cod);
    }
    return std::nullopt;
  }
};

std::optional<Sort> decode_type_sort(const std::string& text) {
  TypeReader r{text};
  auto t = r.type();
  if (!t) return std::nullopt;
  r.skip();
  if (r.pos != text.size()) return std::nullopt;
  return Sort::of_type(*t);
}

SortDomain make_type_domain() {
  SortDomain d;
  d.name = "type";
  d.eq = [](const Sort& a, const Sort& b) { return a == b; };
  d.encode = [](const Sort& s) { return s.show(); };
  d.decode = decode_type_sort;
  d.enumerate = [](std::size_t bound) {
    std::vector<Sort> out;
    for (const auto& t : enumerate_types(bound)) out.push_back(Sort::of_type(t));
    return out;
  };
  return d;
}

}  // namespace

const SortDomain& unit_sort_domain() {
  static const SortDomain d = make_unit_domain();
  return d;
}

const SortDomain& mode_sort_domain() {
  static const SortDomain d = make_mode_domain();
  return d;
}

const SortDomain& type_sort_domain() {
  static const SortDomain d = make_type_domain();
  return d;
}

}  // namespace binderkit
