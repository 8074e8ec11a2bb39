#include "binderkit/printing.hpp"

#include <map>

namespace binderkit {

namespace {

// Computations for the printing semantics: state-threaded renderings. The
// supply is passed by reference so the children of a layer draw names in
// event order.
using Printer = std::function<std::string(NameSupply&)>;

SemanticsDef<std::string, Printer> printing_semantics(const Display& display) {
  SemanticsDef<std::string, Printer> s;
  // names do not mention the scope, so thinning them is a no-op
  s.th_v = [](const std::string& name, const Thinning&) { return name; };
  s.var = [](const std::string& name) -> Printer {
    return [name](NameSupply&) { return name; };
  };
  s.alg = [display](const Sort& sort, const Layer<Kripke<std::string, Printer>>& layer) -> Printer {
    return [display, sort, layer](NameSupply& supply) {
      Layer<Pieces> pieces;
      for (const auto& ev : layer.events) {
        if (std::holds_alternative<PayloadValue>(ev)) {
          pieces.events.emplace_back(std::get<PayloadValue>(ev));
          continue;
        }
        const auto& sub = std::get<SubEvent<Kripke<std::string, Printer>>>(ev);
        Pieces piece;
        if (sub.telescope.empty()) {
          piece.text = sub.child.value()(supply);
        } else {
          for (std::size_t i = 0; i < sub.telescope.size(); ++i) {
            auto [name, rest] = supply.fresh();
            piece.binder_names.push_back(name);
            supply = rest;
          }
          const Ctx& home = sub.child.home();
          Thinning embed = weaken_many(sub.telescope, home);
          Env<std::string> names = Env<std::string>::from_values(
              Ctx(sub.telescope), home.extended(sub.telescope), piece.binder_names);
          piece.text = sub.child.run(embed, names)(supply);
        }
        pieces.events.emplace_back(SubEvent<Pieces>{sub.telescope, sub.sort, std::move(piece)});
      }
      return display(sort, pieces);
    };
  };
  return s;
}

}  // namespace

std::string print(const Desc& d, const Display& display, const Ctx& ctx, const Term& t) {
  NameSupply supply;
  std::vector<std::string> free_names;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    auto [name, rest] = supply.fresh();
    free_names.push_back(name);
    supply = rest;
  }
  Env<std::string> rho = Env<std::string>::from_values(ctx, ctx, std::move(free_names));
  Printer printer = semantics(printing_semantics(display), rho, sort_of(d, t), t);
  return printer(supply);
}

namespace {

const Pieces& piece_at(const Layer<Pieces>& layer, std::size_t event_index) {
  return std::get<SubEvent<Pieces>>(layer.events[event_index]).child;
}

const PayloadValue& payload_at(const Layer<Pieces>& layer, std::size_t event_index) {
  return std::get<PayloadValue>(layer.events[event_index]);
}

}  // namespace

Display utlc_display() {
  return [](const Sort&, const Layer<Pieces>& layer) -> std::string {
    if (payload_at(layer, 0).as_bool()) {
      const auto& fn = piece_at(layer, 1);
      const auto& arg = piece_at(layer, 2);
      return fn.text + " (" + arg.text + ")";
    }
    const auto& body = piece_at(layer, 1);
    return "\xce\xbb" + body.binder_names[0] + ". " + body.text;
  };
}

Display bidi_display() {
  return [](const Sort&, const Layer<Pieces>& layer) -> std::string {
    switch (payload_at(layer, 0).tag_index()) {
      case 0: return piece_at(layer, 1).text + " (" + piece_at(layer, 2).text + ")";
      case 1: {
        const auto& body = piece_at(layer, 1);
        return "\xce\xbb" + body.binder_names[0] + ". " + body.text;
      }
      case 2: return piece_at(layer, 1).text;
      default:
        return "(" + piece_at(layer, 2).text + " : " + payload_at(layer, 1).as_sort().show() + ")";
    }
  };
}

Display stlc_display() {
  return [](const Sort&, const Layer<Pieces>& layer) -> std::string {
    if (payload_at(layer, 0).tag_index() == 0)
      return piece_at(layer, 2).text + " (" + piece_at(layer, 3).text + ")";
    const auto& body = piece_at(layer, 2);
    const Sort dom = payload_at(layer, 1).first().as_sort();
    return "\xce\xbb" + body.binder_names[0] + " : " + dom.show() + ". " + body.text;
  };
}

Display utlc_let_display() {
  return [](const Sort& sort, const Layer<Pieces>& layer) -> std::string {
    auto [left, rest] = split_sum_layer(layer);
    if (left) return utlc_display()(sort, rest);
    const auto& bound = piece_at(rest, 1);
    const auto& body = piece_at(rest, 2);
    return "let " + body.binder_names[0] + " = " + bound.text + " in " + body.text;
  };
}

Display clist_display() {
  return [](const Sort&, const Layer<Pieces>& layer) -> std::string {
    if (payload_at(layer, 0).as_bool()) return "nil";
    const auto& tail = piece_at(layer, 2);
    return payload_at(layer, 1).show() + " ::" + tail.binder_names[0] + " " + tail.text;
  };
}

const Display& display_for(const Syntax& syntax) {
  static const std::map<std::string, Display> table = {
      {"utlc", utlc_display()},         {"bidi", bidi_display()},
      {"stlc", stlc_display()},         {"utlc+let", utlc_let_display()},
      {"clist", clist_display()},
  };
  auto it = table.find(syntax.name);
  if (it == table.end()) throw Error("no display registered for syntax " + syntax.name);
  return it->second;
}

}  // namespace binderkit
