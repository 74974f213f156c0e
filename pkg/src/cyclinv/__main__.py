from cyclinv.cli import main

main()
