#pragma once

// Convenience umbrella include.

#include "alto/cli.hpp"
#include "alto/completion.hpp"
#include "alto/implication.hpp"
#include "alto/interval.hpp"
#include "alto/io.hpp"
#include "alto/iso.hpp"
#include "alto/obstruction.hpp"
#include "alto/oracle.hpp"
#include "alto/pog.hpp"
