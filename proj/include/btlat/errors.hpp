#pragma once

#include <stdexcept>
#include <string>

namespace btlat {

struct NotFiniteType : std::runtime_error {
    explicit NotFiniteType(const std::string& what) : std::runtime_error(what) {}
};

struct RankMismatch : std::runtime_error {
    explicit RankMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct OutsideAlcove : std::runtime_error {
    explicit OutsideAlcove(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySubset : std::runtime_error {
    explicit EmptySubset(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveRotation : std::runtime_error {
    explicit NonPositiveRotation(const std::string& what) : std::runtime_error(what) {}
};

struct NotDominant : std::runtime_error {
    explicit NotDominant(const std::string& what) : std::runtime_error(what) {}
};

struct NotStandard : std::runtime_error {
    explicit NotStandard(const std::string& what) : std::runtime_error(what) {}
};

struct CoverMismatch : std::runtime_error {
    explicit CoverMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NonIntegralExponent : std::runtime_error {
    explicit NonIntegralExponent(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidWord : std::runtime_error {
    explicit InvalidWord(const std::string& what) : std::runtime_error(what) {}
};

} // namespace btlat
