#pragma once

// Output contract for the enumerators: each minimal hitting set is handed
// to the sink exactly once, as an ascending span of internal vertex ids.
// Returning false asks the enumeration to stop early.

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgdual/hypergraph.hpp"

namespace hgdual {

class MhsSink {
 public:
  virtual ~MhsSink() = default;
  virtual bool accept(std::span<const Vertex> mhs) = 0;
};

class CountSink : public MhsSink {
 public:
  bool accept(std::span<const Vertex>) override {
    ++count_;
    return true;
  }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_ = 0;
};

class CollectSink : public MhsSink {
 public:
  bool accept(std::span<const Vertex> mhs) override {
    sets_.emplace_back(mhs.begin(), mhs.end());
    return true;
  }
  std::vector<std::vector<Vertex>>& sets() { return sets_; }
  const std::vector<std::vector<Vertex>>& sets() const { return sets_; }

 private:
  std::vector<std::vector<Vertex>> sets_;
};

// Writes each set as a line of ascending external labels.
class StreamSink : public MhsSink {
 public:
  StreamSink(const Hypergraph& h, std::ostream& out) : h_(&h), out_(&out) {}

  bool accept(std::span<const Vertex> mhs) override {
    buf_.clear();
    for (std::size_t k = 0; k < mhs.size(); ++k) {
      if (k) buf_ += ' ';
      buf_ += std::to_string(h_->label(mhs[k]));
    }
    buf_ += '\n';
    *out_ << buf_;
    ++count_;
    return true;
  }
  std::uint64_t count() const { return count_; }

 private:
  const Hypergraph* h_;
  std::ostream* out_;
  std::string buf_;
  std::uint64_t count_ = 0;
};

// Caps the number of accepted sets; the cap ending the run is reported as
// an abort by the enumerator statistics.
class LimitSink : public MhsSink {
 public:
  LimitSink(MhsSink& inner, std::uint64_t max_outputs)
      : inner_(&inner), remaining_(max_outputs) {}

  bool accept(std::span<const Vertex> mhs) override {
    if (remaining_ == 0) return false;
    --remaining_;
    if (!inner_->accept(mhs)) return false;
    return remaining_ > 0;
  }

 private:
  MhsSink* inner_;
  std::uint64_t remaining_;
};

struct EnumStats {
  std::uint64_t nodes = 0;    // visited search-tree nodes (recursion entries)
  std::uint64_t checks = 0;   // candidate additions tested (minimality checks)
  std::uint64_t pruned = 0;   // violating vertices removed from candidacy
  std::uint64_t emitted = 0;  // minimal hitting sets handed to the sink
  std::size_t max_depth = 0;  // largest |S| reached
  bool aborted = false;       // sink stop or deadline hit
};

using Deadline = std::chrono::steady_clock::time_point;

struct StopToken {
  std::optional<Deadline> deadline;
  bool expired() const {
    return deadline && std::chrono::steady_clock::now() >= *deadline;
  }
};

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("time limit exceeded") {}
};

}  // namespace hgdual
