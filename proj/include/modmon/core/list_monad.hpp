#pragma once

#include <functional>
#include <string>
#include <vector>

#include "modmon/core/rng.hpp"

namespace modmon::core {

template <class T>
using ListVal = std::vector<T>;

template <class T>
ListVal<T> list_unit(T x) {
  return ListVal<T>{std::move(x)};
}

template <class T>
ListVal<T> list_join(const std::vector<ListVal<T>>& xss) {
  ListVal<T> out;
  for (const auto& xs : xss) out.insert(out.end(), xs.begin(), xs.end());
  return out;
}

// join . map f
template <class T, class U>
ListVal<U> list_bind(const std::function<ListVal<U>(const T&)>& f, const ListVal<T>& xs) {
  ListVal<U> out;
  for (const auto& x : xs) {
    auto ys = f(x);
    out.insert(out.end(), ys.begin(), ys.end());
  }
  return out;
}

template <class T>
ListVal<T> list_concat(const ListVal<T>& a, const ListVal<T>& b) {
  ListVal<T> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// A monoid seen as an algebra over the list monad: the action multiplies a
// list out, starting from the unit.
template <class A>
struct MonoidAlgebra {
  std::string name;
  A unit;
  std::function<A(const A&, const A&)> product;
  std::function<bool(const A&, const A&)> equal = [](const A& x, const A& y) { return x == y; };
  std::function<A(Rng&)> generate;
  std::function<std::string(const A&)> show;

  A act(const ListVal<A>& xs) const {
    A acc = unit;
    for (const auto& x : xs) acc = product(acc, x);
    return acc;
  }
};

}  // namespace modmon::core
