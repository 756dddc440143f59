// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fada {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidUtf8 : Error {
    explicit InvalidUtf8(std::size_t byte_offset)
        : Error("invalid UTF-8 at byte offset " + std::to_string(byte_offset)),
          offset(byte_offset) {}
    std::size_t offset;
};

struct ZeroCharacters : Error {
    explicit ZeroCharacters(const std::string& what_text)
        : Error("no in-alphabet characters in " + what_text) {}
};

struct DegenerateInput : Error {
    using Error::Error;
};

struct AlphabetMismatch : Error {
    using Error::Error;
};

struct TieNearEvaluationPoint : Error {
    using Error::Error;
};

struct InvalidSpec : Error {
    using Error::Error;
};

struct OutOfAlphabet : Error {
    OutOfAlphabet(const std::string& character, std::size_t position)
        : Error("character '" + character + "' at position " + std::to_string(position) +
                " is not in the alphabet"),
          character(character), position(position) {}
    std::string character;
    std::size_t position;
};

struct EmptyCorpus : Error {
    EmptyCorpus() : Error("corpus is empty") {}
};

struct EmptyPrefix : Error {
    EmptyPrefix() : Error("prefix distribution of an empty hypothesis") {}
};

struct DegenerateTarget : Error {
    using Error::Error;
};

struct MissingTarget : Error {
    explicit MissingTarget(const std::string& subset_id)
        : Error("no target distribution for subset '" + subset_id + "'"), subset(subset_id) {}
    std::string subset;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct EmptyReference : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

// File-level problems surfaced by the CLI with path and line context.
struct DataError : Error {
    DataError(const std::string& path, std::size_t line, const std::string& message)
        : Error(path + ":" + std::to_string(line) + ": " + message), path(path), line(line) {}
    std::string path;
    std::size_t line;
};

}  // namespace fada
