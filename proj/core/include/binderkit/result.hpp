#ifndef BINDERKIT_RESULT_HPP
#define BINDERKIT_RESULT_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace binderkit {

/// Library-level contract violation (invalid variable lookup, malformed
/// layer handed to a traversal, ...). Expected failures are returned as
/// values instead, see Result below.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Minimal ok-or-error sum used where a failure is a normal outcome.
template <typename T, typename E>
class Result {
 public:
  static Result ok(T value) { return Result(std::in_place_index<0>, std::move(value)); }
  static Result err(E error) { return Result(std::in_place_index<1>, std::move(error)); }

  bool has_value() const { return v_.index() == 0; }
  explicit operator bool() const { return has_value(); }

  const T& value() const {
    if (!has_value()) throw Error("Result::value() on error");
    return std::get<0>(v_);
  }
  T& value() {
    if (!has_value()) throw Error("Result::value() on error");
    return std::get<0>(v_);
  }
  const E& error() const {
    if (has_value()) throw Error("Result::error() on ok");
    return std::get<1>(v_);
  }

 private:
  template <std::size_t I, typename X>
  Result(std::in_place_index_t<I> tag, X&& x) : v_(tag, std::forward<X>(x)) {}
  std::variant<T, E> v_;
};

/// Overload set helper for std::visit.
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace binderkit

#endif
