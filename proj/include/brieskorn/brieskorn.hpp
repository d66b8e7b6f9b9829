#pragma once

#include <brieskorn/census.hpp>
#include <brieskorn/homology.hpp>
#include <brieskorn/integer.hpp>
#include <brieskorn/invariants.hpp>
#include <brieskorn/json_records.hpp>
#include <brieskorn/laurent.hpp>
#include <brieskorn/matrix.hpp>
#include <brieskorn/open_book.hpp>
#include <brieskorn/slope.hpp>
#include <brieskorn/verify.hpp>
