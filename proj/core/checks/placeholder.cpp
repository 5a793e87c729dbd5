// populated as the acceptance suite lands
