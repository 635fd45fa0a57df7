#pragma once

#include "angles.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "gluing.hpp"
#include "identities.hpp"
#include "linalg.hpp"
#include "numeric.hpp"
#include "pachner.hpp"
#include "qnormal.hpp"
#include "series.hpp"
#include "surfaces.hpp"
#include "tetindex.hpp"
#include "triangulation.hpp"
