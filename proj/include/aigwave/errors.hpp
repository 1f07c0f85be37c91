/* aigwave: C++ AIG optimization and RL-driven sequence design
 * Copyright (C) 2026  the aigwave authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file errors.hpp
  \brief Exception types shared across the library
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aigwave
{

/*! \brief AIGER parsing failure; carries the offending line (1-based). */
class parse_error : public std::runtime_error
{
public:
  enum class kind
  {
    malformed_header,
    latches_unsupported,
    dangling_literal,
    cycle_detected,
    truncated,
    io
  };

  parse_error( kind k, const std::string& what, uint64_t line )
      : std::runtime_error( what + " (line " + std::to_string( line ) + ")" ),
        error_kind( k ),
        line_number( line )
  {
  }

  kind error_kind;
  uint64_t line_number;
};

class width_mismatch : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class interface_mismatch : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class shape_mismatch : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/*! \brief Checkpoint or cache file does not match the loading context. */
class schema_mismatch : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class unknown_operator : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class episode_finished : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

class incomplete_trajectory : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

class empty_dataset : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class unknown_study : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace aigwave
