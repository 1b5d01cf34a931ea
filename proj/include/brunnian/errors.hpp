#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace brunnian {

/// Raised when an operation is called outside its domain (wrong rank,
/// strand not fixed, unsupported strand count, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a computation exceeds its letter budget.
class ResourceExhausted : public std::runtime_error {
public:
    ResourceExhausted(std::uint64_t used, std::uint64_t cap)
        : std::runtime_error("letter budget exceeded: " + std::to_string(used) + " > " +
                             std::to_string(cap)),
          used_(used), cap_(cap) {}

    std::uint64_t used() const noexcept { return used_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t used_;
    std::uint64_t cap_;
};

inline constexpr std::uint64_t kDefaultMaxLetters = 10'000'000;

/// Counts letters materialised by one computation and aborts once the cap is
/// crossed. One budget belongs to one computation; it is not shared between
/// threads.
class LetterBudget {
public:
    explicit LetterBudget(std::uint64_t cap = kDefaultMaxLetters) : cap_(cap) {}

    void charge(std::size_t letters) {
        used_ += letters;
        if (used_ > cap_) throw ResourceExhausted(used_, cap_);
    }

    std::uint64_t used() const noexcept { return used_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t cap_;
    std::uint64_t used_ = 0;
};

}  // namespace brunnian
