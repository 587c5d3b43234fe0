#include "modmon/core/instances.hpp"

#include <sstream>

namespace modmon::core {

std::string show_list(const IntList& xs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << ']';
  return out.str();
}

namespace {

constexpr std::int64_t kListAlphabet = 5;

IntList random_list(Rng& rng, std::size_t max_len) {
  IntList xs(rng.below(max_len + 1));
  for (auto& x : xs) x = static_cast<std::int64_t>(rng.below(kListAlphabet));
  return xs;
}

}  // namespace

ListMonad list_monad() {
  ListMonad m;
  m.name = "list";
  m.generate_key = [](Rng& rng) { return static_cast<std::int64_t>(rng.below(kListAlphabet)); };
  m.generate = [](Rng& rng, std::size_t size, std::size_t) { return random_list(rng, size); };
  m.generate_subst = [](Rng& rng, std::size_t size) {
    ListMonad::subst_type s;
    for (std::int64_t k = 0; k < kListAlphabet; ++k)
      if (rng.chance(1, 2)) s.images.emplace(k, random_list(rng, std::min<std::size_t>(size, 4)));
    return s;
  };
  m.unit = [](const std::int64_t& x) { return list_unit(x); };
  m.bind = [m_unit = m.unit](const ListMonad::subst_type& s, const IntList& xs) {
    return list_bind<std::int64_t, std::int64_t>(
        [&](const std::int64_t& x) {
          auto it = s.images.find(x);
          return it != s.images.end() ? it->second : m_unit(x);
        },
        xs);
  };
  m.equal = [](const IntList& a, const IntList& b) { return a == b; };
  m.show = show_list;
  m.show_key = [](const std::int64_t& k) { return std::to_string(k); };
  return m;
}

namespace {

MonoidAlgebra<std::int64_t> int_algebra(std::string name, std::int64_t unit,
                                        std::function<std::int64_t(std::int64_t, std::int64_t)> op,
                                        std::int64_t range) {
  MonoidAlgebra<std::int64_t> a;
  a.name = std::move(name);
  a.unit = unit;
  a.product = [op = std::move(op)](const std::int64_t& x, const std::int64_t& y) { return op(x, y); };
  a.generate = [range](Rng& rng) {
    return range == 0 ? std::int64_t{0}
                      : static_cast<std::int64_t>(rng.below(2 * range + 1)) - range;
  };
  a.show = [](const std::int64_t& x) { return std::to_string(x); };
  return a;
}

}  // namespace

MonoidAlgebra<std::int64_t> sum_algebra() {
  return int_algebra("int-sum", 0, [](std::int64_t x, std::int64_t y) { return x + y; }, 50);
}

MonoidAlgebra<std::int64_t> subtraction_algebra() {
  return int_algebra("int-subtraction", 0, [](std::int64_t x, std::int64_t y) { return x - y; }, 50);
}

MonoidAlgebra<std::int64_t> one_point_algebra() {
  return int_algebra("one-point", 0, [](std::int64_t, std::int64_t) { return std::int64_t{0}; }, 0);
}

const std::vector<std::string>& free_name_pool() {
  static const std::vector<std::string> pool{"x", "y", "z", "w"};
  return pool;
}

ScopedTerm generate_scoped(const Signature& sig, Rng& rng, std::size_t size, std::size_t depth) {
  const bool leaf = size <= 1 || sig.size() == 0 || rng.chance(1, 4);
  if (leaf) {
    if (depth > 0 && rng.chance(1, 2)) return ScopedTerm::bound(rng.below(depth));
    return ScopedTerm::free(rng.pick(free_name_pool()));
  }
  const std::size_t index = rng.below(sig.size());
  const auto& binders = sig.at(index).arity.binders;
  std::vector<ScopedTerm> args;
  const std::size_t share = binders.empty() ? 0 : (size - 1) / binders.size();
  for (std::size_t b : binders) args.push_back(generate_scoped(sig, rng, share, depth + b));
  return ScopedTerm::op(index, std::move(args));
}

MonadInstance<std::string, ScopedTerm> scoped_monad(const Signature& sig) {
  MonadInstance<std::string, ScopedTerm> m;
  m.name = "scoped";
  m.generate_key = [](Rng& rng) { return rng.pick(free_name_pool()); };
  m.generate = [sig](Rng& rng, std::size_t size, std::size_t depth) {
    return generate_scoped(sig, rng, size, depth);
  };
  m.generate_subst = [sig](Rng& rng, std::size_t size) {
    Subst<std::string, ScopedTerm> s;
    for (const auto& name : free_name_pool())
      if (rng.chance(1, 2)) s.images.emplace(name, generate_scoped(sig, rng, size, 0));
    return s;
  };
  m.unit = [](const std::string& name) { return ScopedTerm::free(name); };
  m.bind = [sig](const Subst<std::string, ScopedTerm>& s, const ScopedTerm& t) {
    return gen_subst(sig, GenSubst{s.images}, t);
  };
  m.equal = [](const ScopedTerm& a, const ScopedTerm& b) { return a == b; };
  m.show = [sig](const ScopedTerm& t) { return format_sexpr(sig, t); };
  m.show_key = [](const std::string& k) { return k; };
  m.fresh = [] { return ScopedTerm::bound(0); };
  m.weaken = syntactic_representation(sig).weaken;
  return m;
}

}  // namespace modmon::core
