# pip install python-decouple
from decouple import config as decouple_config


LOG_LEVEL = decouple_config("MIM_LOG_LEVEL", default="WARNING")

# oracle guards
ORACLE_MAX_EDGES = decouple_config("MIM_ORACLE_MAX_EDGES", default=64, cast=int)
STAR_MAX_VERTICES = decouple_config("MIM_STAR_MAX_VERTICES", default=14, cast=int)
KS_BRUTE_MAX_VERTICES = decouple_config("MIM_KS_BRUTE_MAX_VERTICES", default=8, cast=int)
