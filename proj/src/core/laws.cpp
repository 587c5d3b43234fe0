#include "modmon/core/laws.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <thread>

namespace modmon::core {

std::string to_string(LawStatus s) {
  switch (s) {
    case LawStatus::pass:
      return "pass";
    case LawStatus::fail:
      return "FAIL";
    case LawStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

bool LawReport::all_pass() const {
  return std::all_of(laws.begin(), laws.end(),
                     [](const LawResult& r) { return r.status == LawStatus::pass; });
}

const LawResult& LawReport::law(const std::string& name) const {
  for (const auto& r : laws)
    if (r.law == name) return r;
  throw std::out_of_range("no law '" + name + "' in report " + suite + "/" + instance);
}

void LawReport::append(const LawReport& other) {
  laws.insert(laws.end(), other.laws.begin(), other.laws.end());
}

namespace {

struct Partial {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::optional<std::size_t> failing;
  std::string witness;
  std::optional<std::size_t> error_sample;
  std::string error;
};

void run_range(const Property& prop, std::uint64_t seed, std::size_t begin, std::size_t end,
               Partial& out) {
  for (std::size_t i = begin; i < end; ++i) {
    Rng rng(sample_seed(seed, i));
    try {
      const SampleOutcome o = prop(rng);
      switch (o.kind) {
        case SampleOutcome::Kind::holds:
          ++out.checked;
          break;
        case SampleOutcome::Kind::skipped:
          ++out.skipped;
          break;
        case SampleOutcome::Kind::violated:
          ++out.checked;
          if (!out.failing) {
            out.failing = i;
            out.witness = o.witness;
          }
          break;
      }
    } catch (const FuelExhausted&) {
      ++out.skipped;
    } catch (const GeneratorError& e) {
      out.error_sample = i;
      out.error = e.what();
      return;
    }
  }
}

}  // namespace

LawResult check_property(const std::string& law, std::size_t samples, std::uint64_t seed,
                         const Property& prop, const HarnessOptions& opts) {
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.workers, samples));
  std::vector<Partial> parts(workers);
  if (workers == 1) {
    run_range(prop, seed, 0, samples, parts[0]);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (samples + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(samples, w * chunk);
      const std::size_t end = std::min(samples, begin + chunk);
      threads.emplace_back([&, w, begin, end] {
        try {
          run_range(prop, seed, begin, end, parts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  LawResult result;
  result.law = law;
  for (const auto& p : parts) {
    result.checked += p.checked;
    result.skipped += p.skipped;
    if (p.failing && (!result.failing_sample || *p.failing < *result.failing_sample)) {
      result.failing_sample = p.failing;
      result.counterexample = p.witness;
    }
  }
  // Chunks are contiguous, so the first erroring chunk holds the lowest index.
  for (const auto& p : parts) {
    if (p.error_sample) {
      result.status = LawStatus::inconclusive;
      result.note = "generator failure at sample " + std::to_string(*p.error_sample) + ": " + p.error;
      return result;
    }
  }
  if (result.failing_sample)
    result.status = LawStatus::fail;
  else if (result.checked == 0)
    result.status = LawStatus::inconclusive;
  return result;
}

std::string format_report(const LawReport& report) {
  std::ostringstream out;
  out << "suite: " << report.suite << '\n'
      << "instance: " << report.instance << '\n'
      << "samples: " << report.samples << '\n'
      << "seed: " << report.seed << '\n';
  for (const auto& r : report.laws) {
    out << "law " << r.law << ": " << to_string(r.status) << " (checked " << r.checked
        << ", skipped " << r.skipped << ")\n";
    if (r.counterexample)
      out << "  counterexample at sample " << *r.failing_sample << ": " << *r.counterexample << '\n';
    if (r.note) out << "  note: " << *r.note << '\n';
  }
  return out.str();
}

}  // namespace modmon::core
