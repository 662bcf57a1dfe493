import sys
from graphene_zb.cli.main import main

sys.exit(main())
