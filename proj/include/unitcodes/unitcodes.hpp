#pragma once

#include "unitcodes/block.hpp"
#include "unitcodes/conv.hpp"
#include "unitcodes/errors.hpp"
#include "unitcodes/field.hpp"
#include "unitcodes/fourier.hpp"
#include "unitcodes/grouprings.hpp"
#include "unitcodes/matrix.hpp"
#include "unitcodes/named.hpp"
#include "unitcodes/polymat.hpp"
#include "unitcodes/scheme.hpp"
