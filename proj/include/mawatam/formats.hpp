#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mawatam/assembly.hpp"
#include "mawatam/maze.hpp"
#include "mawatam/tile.hpp"

namespace mawatam {

// Splits a line into whitespace-separated words; '#' starts a comment.
std::vector<std::string> split_words(std::string_view line);

// Throws parse-error "line N: ..." -- shared by all text readers.
[[noreturn]] void parse_fail(std::size_t line, const std::string& what);
int parse_int(std::string_view text, std::size_t line);

TileSet load_tileset(std::string_view text, std::string name = "custom");
std::string save_tileset(const TileSet& ts);

Maze load_maze(std::string_view text);
std::string save_maze(const Maze& m);

std::string dump_assembly(const Assembly& a);

std::string read_file(const std::string& path);  // throws file-not-found
void write_file(const std::string& path, std::string_view content);

}  // namespace mawatam
