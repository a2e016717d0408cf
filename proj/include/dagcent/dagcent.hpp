#ifndef DAGCENT_DAGCENT_HPP_
#define DAGCENT_DAGCENT_HPP_

#include "dagcent/acquisition.hpp"
#include "dagcent/centrality.hpp"
#include "dagcent/cross.hpp"
#include "dagcent/distances.hpp"
#include "dagcent/errors.hpp"
#include "dagcent/io.hpp"
#include "dagcent/page_parser.hpp"
#include "dagcent/polytree.hpp"
#include "dagcent/power_mean.hpp"
#include "dagcent/verify.hpp"

#endif  // DAGCENT_DAGCENT_HPP_
