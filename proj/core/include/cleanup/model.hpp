#pragma once

#include <array>
#include <string>
#include <string_view>

namespace cleanup {

enum class Memory { none, complete };
enum class Shelves { unnumbered, numbered };

/// One of the four search models: memory of the pile contents crossed with
/// whether list positions are numbered.
///
///   m1 = (none, unnumbered)      m2 = (none, numbered)
///   m3 = (complete, unnumbered)  m4 = (complete, numbered)
struct Model
{
    Memory memory = Memory::complete;
    Shelves shelves = Shelves::numbered;

    static constexpr Model m1() { return {Memory::none, Shelves::unnumbered}; }
    static constexpr Model m2() { return {Memory::none, Shelves::numbered}; }
    static constexpr Model m3() { return {Memory::complete, Shelves::unnumbered}; }
    static constexpr Model m4() { return {Memory::complete, Shelves::numbered}; }

    constexpr bool numbered() const { return shelves == Shelves::numbered; }
    constexpr bool has_memory() const { return memory == Memory::complete; }

    /// Canonical short name, "m1" .. "m4".
    std::string_view name() const;

    /// Parses "m1" .. "m4"; throws DomainError otherwise.
    static Model parse(std::string_view text);

    friend constexpr bool operator==(Model, Model) = default;
};

inline constexpr std::array<Model, 4> all_models{Model::m1(), Model::m2(), Model::m3(), Model::m4()};

}  // namespace cleanup
