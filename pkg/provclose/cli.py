"""The ``provclose`` console script: every subcommand is a management command of provclose.core."""
import os
import sys
from typing import List, Optional

import configurations.importer
from django.core.management import execute_from_command_line


def main(argv: Optional[List[str]] = None) -> None:
    os.environ['DJANGO_SETTINGS_MODULE'] = 'provclose.settings'
    os.environ.setdefault('DJANGO_CONFIGURATION', 'DevelopmentConfiguration')
    configurations.importer.install(check_options=True)

    execute_from_command_line(['provclose', *(sys.argv[1:] if argv is None else argv)])


if __name__ == '__main__':
    main()
