#pragma once

#include "rado/classify.hpp"
#include "rado/errors.hpp"
#include "rado/field.hpp"
#include "rado/gallery.hpp"
#include "rado/half.hpp"
#include "rado/homology.hpp"
#include "rado/io.hpp"
#include "rado/level_network.hpp"
#include "rado/mesh.hpp"
#include "rado/regions.hpp"
#include "rado/verify.hpp"
