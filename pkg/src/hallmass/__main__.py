from hallmass.cli import main

main()
